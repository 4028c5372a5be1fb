#include "ksix/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ksix/error.hpp"
#include "ksix/normal_form.hpp"

namespace ksix {

namespace {

Integer floor_mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace

std::string to_string(const Order& order) { return order ? order->get_str() : std::string("infinity"); }

bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  if (a.torsion.size() != b.torsion.size()) return a.torsion.size() < b.torsion.size();
  for (std::size_t i = 0; i < a.torsion.size(); ++i)
    if (a.torsion[i] != b.torsion[i]) return a.torsion[i] < b.torsion[i];
  return false;
}

std::string to_string(const CanonicalForm& form) {
  if (form.is_trivial()) return "0";
  std::vector<std::string> parts;
  if (form.rank == 1) parts.emplace_back("Z");
  if (form.rank > 1) parts.push_back("Z^" + std::to_string(form.rank));
  for (const auto& d : form.torsion) parts.push_back("Z_" + d.get_str());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ⊕ ";
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// AbelianGroup

struct AbelianGroup::Data {
  IntMatrix relations;
  CanonicalForm canonical;
  IntVector smith_orders;
  IntMatrix smith_generators;  // g x m
  IntMatrix smith_transform;   // m x g
};

AbelianGroup::AbelianGroup() : AbelianGroup(IntMatrix(0, 0)) {}

AbelianGroup::AbelianGroup(IntMatrix relations) {
  const std::size_t g = relations.rows();
  SmithDecomposition snf = smith_normal_form(relations);
  IntVector diag = snf.invariants();
  diag.resize(g, Integer(0));  // generators beyond the relation count are free

  // Q = U^{-1}: its columns are the Smith generators in original coordinates.
  IntMatrix q = IntMatrix::identity(g);
  if (g > 0) {
    auto inv = solve_integer(snf.left, IntMatrix::identity(g));
    if (!inv) throw MathError("internal: Smith transform not invertible");
    q = *inv;
  }

  std::vector<std::size_t> torsion_idx, free_idx;
  for (std::size_t i = 0; i < g; ++i) {
    if (sgn(diag[i]) == 0)
      free_idx.push_back(i);
    else if (diag[i] != 1)
      torsion_idx.push_back(i);
  }
  std::vector<std::size_t> keep = torsion_idx;
  keep.insert(keep.end(), free_idx.begin(), free_idx.end());

  auto data = std::make_shared<Data>();
  data->relations = std::move(relations);
  data->canonical.rank = free_idx.size();
  for (std::size_t i : torsion_idx) data->canonical.torsion.push_back(diag[i]);
  for (std::size_t i : keep) data->smith_orders.push_back(diag[i]);
  data->smith_generators = q.select_columns(keep);
  data->smith_transform = snf.left.select_rows(keep);
  data_ = std::move(data);
}

AbelianGroup AbelianGroup::free(std::size_t rank) { return AbelianGroup(IntMatrix(rank, 0)); }

AbelianGroup AbelianGroup::cyclic(const Integer& n) { return diagonal(IntVector{n}); }

AbelianGroup AbelianGroup::from_invariants(std::size_t rank, const IntVector& torsion) {
  IntVector orders = torsion;
  orders.resize(torsion.size() + rank, Integer(0));
  return diagonal(orders);
}

AbelianGroup AbelianGroup::diagonal(const IntVector& orders) {
  IntMatrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 0) throw MathError("cyclic order must be nonnegative");
    rel(i, i) = orders[i];
  }
  return AbelianGroup(std::move(rel));
}

std::size_t AbelianGroup::generators() const { return data_->relations.rows(); }
const IntMatrix& AbelianGroup::relations() const { return data_->relations; }
const CanonicalForm& AbelianGroup::canonical() const { return data_->canonical; }
const IntVector& AbelianGroup::smith_orders() const { return data_->smith_orders; }
const IntMatrix& AbelianGroup::smith_generators() const { return data_->smith_generators; }
const IntMatrix& AbelianGroup::smith_transform() const { return data_->smith_transform; }

Order AbelianGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& d : canonical().torsion) n *= d;
  return n;
}

IntVector AbelianGroup::smith_coordinates(const IntVector& x) const {
  if (x.size() != generators()) throw MathError("element has wrong number of coordinates");
  IntVector s = data_->smith_transform * x;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (sgn(data_->smith_orders[i]) != 0) s[i] = floor_mod(s[i], data_->smith_orders[i]);
  return s;
}

IntVector AbelianGroup::from_smith(const IntVector& s) const { return data_->smith_generators * s; }

bool AbelianGroup::is_zero(const IntVector& x) const { return ksix::is_zero(smith_coordinates(x)); }

bool AbelianGroup::equal(const IntVector& x, const IntVector& y) const {
  if (x.size() != y.size()) return false;
  IntVector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return is_zero(d);
}

bool AbelianGroup::kills(const IntMatrix& columns) const {
  if (columns.rows() != generators()) throw MathError("column vectors have wrong length");
  for (std::size_t c = 0; c < columns.cols(); ++c)
    if (!is_zero(columns.column(c))) return false;
  return true;
}

Order AbelianGroup::element_order(const IntVector& x) const {
  IntVector s = smith_coordinates(x);
  Integer result = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (sgn(s[i]) == 0) continue;
    const Integer& d = data_->smith_orders[i];
    if (sgn(d) == 0) return std::nullopt;
    result = lcm_of(result, Integer(d / gcd_of(s[i], d)));
  }
  return result;
}

std::vector<IntVector> AbelianGroup::elements() const {
  if (!is_finite()) throw MathError("cannot enumerate an infinite group");
  const IntVector& orders = data_->smith_orders;
  std::vector<IntVector> out;
  IntVector s(orders.size(), Integer(0));
  for (;;) {
    out.push_back(from_smith(s));
    std::size_t i = 0;
    while (i < s.size()) {
      s[i] += 1;
      if (s[i] < orders[i]) break;
      s[i] = 0;
      ++i;
    }
    if (i == s.size()) break;
  }
  return out;
}

bool AbelianGroup::same_presentation(const AbelianGroup& other) const {
  return data_ == other.data_ || data_->relations == other.data_->relations;
}

std::string to_string(const AbelianGroup& g) { return to_string(g.canonical()); }

// ---------------------------------------------------------------------------
// GroupHom

GroupHom::GroupHom(AbelianGroup domain, AbelianGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.generators() || matrix_.cols() != domain_.generators()) {
    std::ostringstream os;
    os << "homomorphism matrix is " << matrix_.rows() << "x" << matrix_.cols() << ", expected "
       << codomain_.generators() << "x" << domain_.generators();
    throw MathError(os.str());
  }
  if (!codomain_.kills(matrix_ * domain_.relations()))
    throw MathError(matrix_.rows() * matrix_.cols() <= 16
                        ? "matrix " + matrix_.to_string() + " does not define a homomorphism"
                        : "the " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                              " matrix does not define a homomorphism");
}

GroupHom::GroupHom(AbelianGroup domain, AbelianGroup codomain, IntMatrix matrix, Unchecked)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {}

GroupHom GroupHom::identity(const AbelianGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.generators()), Unchecked{});
}

GroupHom GroupHom::zero(const AbelianGroup& domain, const AbelianGroup& codomain) {
  return GroupHom(domain, codomain, IntMatrix(codomain.generators(), domain.generators()), Unchecked{});
}

GroupHom GroupHom::multiplication(const AbelianGroup& g, const Integer& k) {
  return GroupHom(g, g, k * IntMatrix::identity(g.generators()), Unchecked{});
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (outer.domain_.generators() != inner.codomain_.generators())
    throw MathError("compose: intermediate groups differ");
  return GroupHom(inner.domain_, outer.codomain_, outer.matrix_ * inner.matrix_, GroupHom::Unchecked{});
}

GroupHom operator+(const GroupHom& a, const GroupHom& b) {
  return GroupHom(a.domain_, a.codomain_, a.matrix_ + b.matrix_, GroupHom::Unchecked{});
}

GroupHom operator-(const GroupHom& a, const GroupHom& b) {
  return GroupHom(a.domain_, a.codomain_, a.matrix_ - b.matrix_, GroupHom::Unchecked{});
}

GroupHom operator*(const Integer& k, const GroupHom& f) {
  return GroupHom(f.domain_, f.codomain_, k * f.matrix_, GroupHom::Unchecked{});
}

GroupHom GroupHom::operator-() const { return GroupHom(domain_, codomain_, -matrix_, Unchecked{}); }

bool operator==(const GroupHom& a, const GroupHom& b) {
  if (a.matrix_.rows() != b.matrix_.rows() || a.matrix_.cols() != b.matrix_.cols()) return false;
  return a.codomain_.kills(a.matrix_ - b.matrix_);
}

// ---------------------------------------------------------------------------
// Kernels, images, cokernels

namespace {

// {c in Z^g : F c lies in the codomain relation lattice}, as a lattice basis.
IntMatrix preimage_lattice(const GroupHom& f) {
  const std::size_t g = f.domain().generators();
  IntMatrix joint = hstack(f.matrix(), f.codomain().relations());
  IntMatrix ker = integer_kernel(joint);
  IntMatrix top = ker.block(0, 0, g, ker.cols());
  return lattice_basis(top);
}

}  // namespace

Subgroup kernel(const GroupHom& f) {
  IntMatrix basis = preimage_lattice(f);
  auto rel = solve_integer(basis, f.domain().relations());
  if (!rel) throw MathError("internal: domain relations outside the kernel lattice");
  AbelianGroup group(std::move(*rel));
  GroupHom inclusion(group, f.domain(), basis);
  return {std::move(group), std::move(inclusion)};
}

Subgroup image(const GroupHom& f) {
  AbelianGroup group(preimage_lattice(f));
  GroupHom inclusion(group, f.codomain(), f.matrix());
  return {std::move(group), std::move(inclusion)};
}

Quotient cokernel(const GroupHom& f) {
  AbelianGroup group(hstack(f.codomain().relations(), f.matrix()));
  GroupHom projection(f.codomain(), group, IntMatrix::identity(f.codomain().generators()));
  return {std::move(group), std::move(projection)};
}

KernelImageCokernel kernel_image_cokernel(const GroupHom& f) { return {kernel(f), image(f), cokernel(f)}; }

bool is_injective(const GroupHom& f) { return kernel(f).group.is_trivial(); }
bool is_surjective(const GroupHom& f) { return cokernel(f).group.is_trivial(); }
bool is_bijective(const GroupHom& f) { return is_injective(f) && is_surjective(f); }

bool is_exact_at(const GroupHom& incoming, const GroupHom& outgoing) {
  if (incoming.codomain().generators() != outgoing.domain().generators())
    throw MathError("is_exact_at: maps do not share a middle group");
  if (!compose(outgoing, incoming).is_zero()) return false;
  // im(incoming) ⊆ ker(outgoing); equality iff the kernel lattice lies in
  // im + relations.
  const AbelianGroup& middle = outgoing.domain();
  IntMatrix ker = preimage_lattice(outgoing);
  IntMatrix im = hstack(incoming.matrix(), middle.relations());
  return lattice_contains(im, ker);
}

std::optional<IntVector> preimage(const GroupHom& f, const IntVector& y) {
  IntMatrix joint = hstack(f.matrix(), f.codomain().relations());
  auto sol = solve_integer(joint, y);
  if (!sol) return std::nullopt;
  sol->resize(f.domain().generators());
  return sol;
}

bool is_isomorphic(const AbelianGroup& g, const AbelianGroup& h) { return g.canonical() == h.canonical(); }

namespace {

// Pairwise coprime base: every input is a product of powers of base entries.
IntVector coprime_base(IntVector values) {
  std::vector<Integer> base;
  for (auto& v : values)
    if (v > 1) base.push_back(v);
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Integer g = gcd_of(base[i], base[j]);
        if (g == 1) continue;
        Integer a = base[i] / g, b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (const Integer& x : {a, g, b})
          if (x > 1) base.push_back(x);
        changed = true;
      }
  }
  return base;
}

std::size_t multiplicity(Integer d, const Integer& q) {
  std::size_t e = 0;
  while (mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t())) {
    d /= q;
    ++e;
  }
  return e;
}

// counts[k-1] = number of torsion factors divisible by q^k.
std::vector<std::size_t> layer_counts(const IntVector& torsion, const Integer& q) {
  std::vector<std::size_t> counts;
  for (const auto& d : torsion) {
    std::size_t e = multiplicity(d, q);
    if (counts.size() < e) counts.resize(e, 0);
    for (std::size_t k = 0; k < e; ++k) ++counts[k];
  }
  return counts;
}

// True when for every base element q and k >= 1:
//   #(small factors divisible by q^k) <= #(large factors divisible by q^k) + slack.
bool layers_dominated(const IntVector& small, const IntVector& large, std::size_t slack) {
  IntVector all = small;
  all.insert(all.end(), large.begin(), large.end());
  for (const auto& q : coprime_base(all)) {
    auto s = layer_counts(small, q);
    auto l = layer_counts(large, q);
    for (std::size_t k = 0; k < s.size(); ++k) {
      std::size_t lk = k < l.size() ? l[k] : 0;
      if (s[k] > lk + slack) return false;
    }
  }
  return true;
}

}  // namespace

bool exists_epimorphism(const AbelianGroup& g, const AbelianGroup& h) {
  const auto& cg = g.canonical();
  const auto& ch = h.canonical();
  if (ch.rank > cg.rank) return false;
  return layers_dominated(ch.torsion, cg.torsion, cg.rank - ch.rank);
}

bool exists_monomorphism(const AbelianGroup& g, const AbelianGroup& h) {
  const auto& cg = g.canonical();
  const auto& ch = h.canonical();
  if (cg.rank > ch.rank) return false;
  return layers_dominated(cg.torsion, ch.torsion, 0);
}

Order exponent(const AbelianGroup& g) {
  const auto& c = g.canonical();
  if (c.rank > 0) return std::nullopt;
  return c.torsion.empty() ? Integer(1) : c.torsion.back();
}

Order element_order(const GroupElement& x) { return x.parent.element_order(x.coordinates); }

DirectSum direct_sum(const AbelianGroup& g, const AbelianGroup& h) {
  AbelianGroup sum(block_diagonal(g.relations(), h.relations()));
  const std::size_t a = g.generators(), b = h.generators();
  IntMatrix i1 = vstack(IntMatrix::identity(a), IntMatrix(b, a));
  IntMatrix i2 = vstack(IntMatrix(a, b), IntMatrix::identity(b));
  return {sum, GroupHom(g, sum, i1), GroupHom(h, sum, i2), GroupHom(sum, g, i1.transpose()),
          GroupHom(sum, h, i2.transpose())};
}

// ---------------------------------------------------------------------------
// HomGroup

HomGroup::HomGroup(AbelianGroup source, AbelianGroup target)
    : source_(std::move(source)), target_(std::move(target)) {
  const IntVector& src = source_.smith_orders();
  const IntVector& tgt = target_.smith_orders();
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < tgt.size(); ++j) {
      const Integer& d = src[i];
      const Integer& b = tgt[j];
      Slot slot{i, j, 1, 0};
      if (sgn(d) == 0) {
        slot.order = b;  // Hom(Z, Z_b) = Z_b, Hom(Z, Z) = Z
      } else if (sgn(b) == 0) {
        continue;  // Hom(Z_d, Z) = 0
      } else {
        Integer g = gcd_of(d, b);
        if (g == 1) continue;
        slot.order = g;
        slot.step = b / g;
      }
      slots_.push_back(slot);
      orders_.push_back(slot.order);
    }
  }
  group_ = AbelianGroup::diagonal(orders_);

  const IntMatrix& src_coords = source_.smith_transform();
  const IntMatrix& tgt_gens = target_.smith_generators();
  for (const Slot& s : slots_) {
    // Smith generator i of the source goes to step * (Smith generator j).
    IntMatrix e(tgt.size(), src.size());
    e(s.target_index, s.source_index) = s.step;
    basis_.emplace_back(source_, target_, tgt_gens * e * src_coords);
  }
}

IntVector HomGroup::coordinates(const GroupHom& f) const {
  if (f.domain().generators() != source_.generators() || f.codomain().generators() != target_.generators())
    throw MathError("HomGroup::coordinates: homomorphism has the wrong shape");
  IntMatrix images = f.matrix() * source_.smith_generators();
  IntVector coords(slots_.size());
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    const Slot& s = slots_[k];
    IntVector y = target_.smith_coordinates(images.column(s.source_index));
    Integer v = y[s.target_index];
    if (!mpz_divisible_p(v.get_mpz_t(), s.step.get_mpz_t()))
      throw MathError("HomGroup::coordinates: matrix is not a homomorphism");
    v /= s.step;
    if (sgn(s.order) != 0) v = floor_mod(v, s.order);
    coords[k] = v;
  }
  return coords;
}

GroupHom HomGroup::evaluate(const IntVector& coords) const {
  if (coords.size() != basis_.size()) throw MathError("HomGroup::evaluate: wrong coordinate count");
  GroupHom f = GroupHom::zero(source_, target_);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (sgn(coords[k]) != 0) f = f + coords[k] * basis_[k];
  return f;
}

SmithPresentation smith_presentation(const AbelianGroup& g) {
  return {AbelianGroup::diagonal(g.smith_orders()), g.smith_generators(), g.smith_transform()};
}

}  // namespace ksix
