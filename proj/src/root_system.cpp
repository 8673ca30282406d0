#include "verlinde/root_system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "verlinde/cache.hpp"

namespace verlinde {

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat rat_identity(int n) {
  RatMat m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

// Gauss-Jordan inverse; the Cartan matrix is always invertible.
RatMat rat_inverse(const std::vector<std::vector<long>>& a) {
  int n = static_cast<int>(a.size());
  RatMat m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Rat(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  RatMat inv = rat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("rat_inverse: singular matrix");
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
    std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
    Rat lead = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= lead;
      inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= lead;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
            f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
  }
  return inv;
}

Rat rat_det(const std::vector<std::vector<long>>& a) {
  int n = static_cast<int>(a.size());
  RatMat m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Rat(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
      det = -det;
    }
    Rat lead = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= lead;
    for (int r = col + 1; r < n; ++r) {
      Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / lead;
      if (f == 0) continue;
      for (int j = col; j < n; ++j)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
    }
  }
  return det;
}

struct FamilyShape {
  std::vector<Rat> d;                        // (alpha_i, alpha_i)/2
  std::vector<std::pair<int, int>> edges;    // Dynkin diagram bonds, 0-indexed
};

FamilyShape family_shape(Family f, int n) {
  FamilyShape s;
  s.d.assign(static_cast<std::size_t>(n), Rat(1));
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) s.edges.emplace_back(i, i + 1);
  };
  switch (f) {
    case Family::A:
      chain(0, n - 1);
      break;
    case Family::B:
      chain(0, n - 1);
      s.d[static_cast<std::size_t>(n - 1)] = frac(1, 2);
      break;
    case Family::C:
      chain(0, n - 1);
      for (int i = 0; i < n - 1; ++i) s.d[static_cast<std::size_t>(i)] = frac(1, 2);
      break;
    case Family::D:
      chain(0, n - 3);
      s.edges.emplace_back(n - 3, n - 2);
      s.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4.
      s.edges.emplace_back(0, 2);
      chain(2, n - 1);
      s.edges.emplace_back(1, 3);
      break;
    case Family::F:
      chain(0, 3);
      s.d[2] = frac(1, 2);
      s.d[3] = frac(1, 2);
      break;
    case Family::G:
      s.edges.emplace_back(0, 1);
      s.d[1] = frac(1, 3);
      break;
  }
  return s;
}

bool valid_type(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 3;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

}  // namespace

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw InvalidInputError(std::string("unknown algebra family '") + c + "'");
  }
}

char family_char(Family f) { return static_cast<char>(f); }

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < labels.size(); ++i) r.labels[i] += o.labels[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (std::size_t i = 0; i < labels.size(); ++i) r.labels[i] -= o.labels[i];
  return r;
}

Weight Weight::operator*(long k) const {
  Weight r = *this;
  for (auto& l : r.labels) l *= k;
  return r;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

Weight WeylElement::apply(const Weight& w) const {
  Weight r = Weight::zero(rank);
  for (int i = 0; i < rank; ++i) {
    long acc = 0;
    for (int j = 0; j < rank; ++j)
      acc += mat[static_cast<std::size_t>(i * rank + j)] * w.labels[static_cast<std::size_t>(j)];
    r.labels[static_cast<std::size_t>(i)] = acc;
  }
  return r;
}

long WeylElement::det() const {
  std::vector<std::vector<long>> a(static_cast<std::size_t>(rank),
                                   std::vector<long>(static_cast<std::size_t>(rank)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          mat[static_cast<std::size_t>(i * rank + j)];
  Rat d = rat_det(a);
  if (!rat_is_integer(d)) throw std::logic_error("WeylElement::det: non-integer determinant");
  return static_cast<long>(d.get_num().get_si());
}

struct RootSystem::Data {
  Family family;
  int rank;
  std::vector<std::vector<long>> cartan;
  RatMat cartan_inv;
  RatMat gram;
  std::vector<Rat> d;
  Weight rho, theta;
  std::vector<long> comarks;
  long h = 0, hv = 0, lacety = 1, lattice_n = 1, lattice_n_alt = 1;
  std::vector<Weight> pos_roots;

  mutable std::mutex lazy_mutex;
  mutable std::vector<WeylElement> weyl;
};

RootSystem RootSystem::build(Family family, int rank) {
  if (!valid_type(family, rank))
    throw InvalidInputError("invalid simple type " + std::string(1, family_char(family)) +
                            std::to_string(rank));
  return build_impl(family, rank);
}

RootSystem RootSystem::build_impl(Family family, int rank) {
  auto d = std::make_shared<Data>();
  d->family = family;
  d->rank = rank;
  auto shape = family_shape(family, rank);
  d->d = shape.d;

  auto& a = d->cartan;
  a.assign(static_cast<std::size_t>(rank), std::vector<long>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  for (auto [i, j] : shape.edges) {
    Rat pair_ij = -std::max(shape.d[static_cast<std::size_t>(i)], shape.d[static_cast<std::size_t>(j)]);
    Rat aij = pair_ij / shape.d[static_cast<std::size_t>(i)];
    Rat aji = pair_ij / shape.d[static_cast<std::size_t>(j)];
    if (!rat_is_integer(aij) || !rat_is_integer(aji))
      throw std::logic_error("RootSystem: non-integer Cartan entry");
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long>(aij.get_num().get_si());
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = static_cast<long>(aji.get_num().get_si());
  }

  d->cartan_inv = rat_inverse(a);
  d->gram.assign(static_cast<std::size_t>(rank), std::vector<Rat>(static_cast<std::size_t>(rank)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      d->gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          d->d[static_cast<std::size_t>(i)] * d->cartan_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < i; ++j)
      if (d->gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          d->gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw std::logic_error("RootSystem: asymmetric Gram matrix");

  d->rho = Weight(std::vector<long>(static_cast<std::size_t>(rank), 1));

  // Positive roots by closure over root strings, in simple-root coordinates.
  std::map<std::vector<long>, int> seen;  // root coords -> height
  std::vector<std::vector<std::vector<long>>> by_height(1);
  by_height.reserve(64);  // heights stop at the Coxeter number minus one
  for (int i = 0; i < rank; ++i) {
    std::vector<long> e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen[e] = 1;
    by_height[0].push_back(std::move(e));
  }
  for (std::size_t h = 0; h < by_height.size(); ++h) {
    for (std::size_t idx = 0; idx < by_height[h].size(); ++idx) {
      const std::vector<long> beta = by_height[h][idx];
      for (int i = 0; i < rank; ++i) {
        std::vector<long> up = beta;
        up[static_cast<std::size_t>(i)] += 1;
        if (seen.count(up)) continue;
        // <beta, alpha_i^vee> from Cartan rows; string length below decides.
        long pairing = 0;
        for (int j = 0; j < rank; ++j)
          pairing += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * beta[static_cast<std::size_t>(j)];
        long p = 0;
        std::vector<long> down = beta;
        while (true) {
          down[static_cast<std::size_t>(i)] -= 1;
          if (down[static_cast<std::size_t>(i)] < 0 || !seen.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          seen[up] = static_cast<int>(h) + 2;
          if (by_height.size() <= h + 1) by_height.resize(h + 2);
          by_height[h + 1].push_back(up);
        }
      }
    }
  }
  while (!by_height.empty() && by_height.back().empty()) by_height.pop_back();

  auto labels_of_rc = [&](const std::vector<long>& rc) {
    Weight w = Weight::zero(rank);
    for (int i = 0; i < rank; ++i) {
      long acc = 0;
      for (int j = 0; j < rank; ++j)
        acc += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * rc[static_cast<std::size_t>(j)];
      w.labels[static_cast<std::size_t>(i)] = acc;
    }
    return w;
  };
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end());
    for (auto& rc : level) d->pos_roots.push_back(labels_of_rc(rc));
  }

  if (by_height.back().size() != 1) throw std::logic_error("RootSystem: highest root not unique");
  const auto& theta_rc = by_height.back()[0];
  d->theta = labels_of_rc(theta_rc);
  long height = std::accumulate(theta_rc.begin(), theta_rc.end(), 0L);
  d->h = height + 1;
  Rat hv(1);
  for (int i = 0; i < rank; ++i)
    hv += Rat(theta_rc[static_cast<std::size_t>(i)]) * d->d[static_cast<std::size_t>(i)];
  if (!rat_is_integer(hv)) throw std::logic_error("RootSystem: non-integer dual Coxeter number");
  d->hv = static_cast<long>(hv.get_num().get_si());

  Rat dmin(1);
  for (const auto& di : d->d) dmin = std::min(dmin, di);
  d->lacety = static_cast<long>(Rat(1 / dmin).get_num().get_si());

  // Comarks (omega_i, theta) = m_i d_i; always integral.
  d->comarks.resize(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    Rat cm = Rat(theta_rc[static_cast<std::size_t>(i)]) * d->d[static_cast<std::size_t>(i)];
    if (!rat_is_integer(cm)) throw std::logic_error("RootSystem: non-integer comark");
    d->comarks[static_cast<std::size_t>(i)] = static_cast<long>(cm.get_num().get_si());
  }

  Int n_lcm(1);
  for (const auto& row : d->gram)
    for (const auto& g : row) n_lcm = lcm(n_lcm, g.get_den());
  d->lattice_n = static_cast<long>(n_lcm.get_si());
  // N_alt: least N with N^2 clearing every Gram denominator.
  long n_alt = 1;
  long rem = d->lattice_n;
  for (long p = 2; p * p <= rem; ++p) {
    if (rem % p) continue;
    int e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    for (int k = 0; k < (e + 1) / 2; ++k) n_alt *= p;
  }
  if (rem > 1) n_alt *= rem;
  // rem's exponent was 1, ceil(1/2) = 1: already handled by the line above.
  d->lattice_n_alt = n_alt;

  // Sanity: (theta, theta) = 2 and Gram positive definite.
  RootSystem rs(d);
  if (rs.inner(d->theta, d->theta) != 2) throw std::logic_error("RootSystem: theta norm != 2");
  for (int k = 1; k <= rank; ++k) {
    RatMat sub(static_cast<std::size_t>(k), std::vector<Rat>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            d->gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    // Reuse rat_det through a scaled integer matrix is overkill; eliminate directly.
    Rat det(1);
    RatMat m = sub;
    bool singular = false;
    for (int col = 0; col < k && !singular; ++col) {
      int pivot = -1;
      for (int r = col; r < k; ++r)
        if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) {
        singular = true;
        break;
      }
      if (pivot != col) {
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
        det = -det;
      }
      Rat lead = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      det *= lead;
      for (int r = col + 1; r < k; ++r) {
        Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / lead;
        for (int j = col; j < k; ++j)
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
              f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
    if (singular || det <= 0) throw std::logic_error("RootSystem: Gram not positive definite");
  }
  return rs;
}

RootSystem RootSystem::build(const std::string& name) {
  if (name.size() < 2) throw InvalidInputError("bad algebra name '" + name + "'");
  Family f = family_from_char(name[0]);
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw InvalidInputError("bad algebra name '" + name + "'");
  }
  return build(f, rank);
}

Family RootSystem::family() const { return d_->family; }
int RootSystem::rank() const { return d_->rank; }

std::string RootSystem::name() const {
  return std::string(1, family_char(d_->family)) + std::to_string(d_->rank);
}

const std::vector<std::vector<long>>& RootSystem::cartan() const { return d_->cartan; }
const std::vector<std::vector<Rat>>& RootSystem::gram() const { return d_->gram; }
const std::vector<Rat>& RootSystem::root_norms_half() const { return d_->d; }
const Weight& RootSystem::rho() const { return d_->rho; }
const Weight& RootSystem::theta() const { return d_->theta; }
long RootSystem::coxeter_number() const { return d_->h; }
long RootSystem::dual_coxeter_number() const { return d_->hv; }
long RootSystem::lacety() const { return d_->lacety; }
long RootSystem::lattice_level() const { return d_->lattice_n; }
long RootSystem::lattice_level_alt() const { return d_->lattice_n_alt; }
bool RootSystem::simply_laced() const { return d_->lacety == 1; }

RootSystem RootSystem::dual() const {
  Family f = d_->family;
  if (f == Family::B) f = Family::C;
  else if (f == Family::C) f = Family::B;
  return build_impl(f, d_->rank);
}

Rat RootSystem::inner(const Weight& x, const Weight& y) const {
  if (x.rank() != static_cast<std::size_t>(d_->rank) || y.rank() != static_cast<std::size_t>(d_->rank))
    throw InvalidInputError("inner: rank mismatch");
  Rat acc(0);
  for (int i = 0; i < d_->rank; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    Rat row(0);
    for (int j = 0; j < d_->rank; ++j)
      row += d_->gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
    acc += Rat(x[static_cast<std::size_t>(i)]) * row;
  }
  return acc;
}

Rat RootSystem::inner_dual(const Weight& x, const Weight& y_dual) const {
  if (x.rank() != static_cast<std::size_t>(d_->rank) ||
      y_dual.rank() != static_cast<std::size_t>(d_->rank))
    throw InvalidInputError("inner_dual: rank mismatch");
  // (omega_i, omega_j^vee) = G_ij / d_j.
  Rat acc(0);
  for (int i = 0; i < d_->rank; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    Rat row(0);
    for (int j = 0; j < d_->rank; ++j)
      row += d_->gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] /
             d_->d[static_cast<std::size_t>(j)] * y_dual[static_cast<std::size_t>(j)];
    acc += Rat(x[static_cast<std::size_t>(i)]) * row;
  }
  return acc;
}

long RootSystem::level_of(const Weight& w) const {
  long acc = 0;
  for (int i = 0; i < d_->rank; ++i)
    acc += d_->comarks[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
  return acc;
}

bool RootSystem::is_dominant(const Weight& w) const {
  return std::all_of(w.labels.begin(), w.labels.end(), [](long l) { return l >= 0; });
}

Weight RootSystem::simple_reflection(int i, const Weight& w) const {
  Weight r = w;
  long wi = w[static_cast<std::size_t>(i)];
  if (wi == 0) return r;
  for (int j = 0; j < d_->rank; ++j)
    r.labels[static_cast<std::size_t>(j)] -=
        wi * d_->cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return r;
}

std::vector<Weight> RootSystem::dominant_weights_of_level(long m, const Limits& lim) const {
  if (m < 0) throw InvalidInputError("dominant_weights_of_level: negative level");
  std::vector<Weight> cached;
  if (cache::load_weight_list(name(), m, cached)) {
    if (static_cast<long>(cached.size()) > lim.simples_max)
      throw CapExceededError("dominant weight count exceeds cap " + std::to_string(lim.simples_max));
    return cached;
  }

  std::vector<Weight> out;
  std::vector<long> current(static_cast<std::size_t>(d_->rank), 0);
  // Lexicographic ascending enumeration of all labels with sum of
  // comark-weighted entries <= m.
  auto rec = [&](auto&& self, int pos, long budget) -> void {
    if (pos == d_->rank) {
      if (static_cast<long>(out.size()) >= lim.simples_max)
        throw CapExceededError("dominant weight count exceeds cap " + std::to_string(lim.simples_max));
      out.emplace_back(current);
      return;
    }
    long c = d_->comarks[static_cast<std::size_t>(pos)];
    for (long a = 0; a * c <= budget; ++a) {
      current[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, budget - a * c);
    }
    current[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end());
  cache::store_weight_list(name(), m, out);
  return out;
}

bool RootSystem::in_root_lattice(const Weight& w) const {
  // Solve cartan * c = labels; w is in Q iff c is integral.
  for (int j = 0; j < d_->rank; ++j) {
    Rat c(0);
    for (int i = 0; i < d_->rank; ++i)
      c += d_->cartan_inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
           w[static_cast<std::size_t>(i)];
    if (!rat_is_integer(c)) return false;
  }
  return true;
}

const std::vector<Weight>& RootSystem::positive_roots() const { return d_->pos_roots; }

const std::vector<WeylElement>& RootSystem::weyl_group(const Limits& lim) const {
  std::lock_guard<std::mutex> lock(d_->lazy_mutex);
  if (!d_->weyl.empty()) {
    if (static_cast<long>(d_->weyl.size()) > lim.weyl_max)
      throw CapExceededError("Weyl group order exceeds cap " + std::to_string(lim.weyl_max));
    return d_->weyl;
  }
  std::vector<WeylElement> loaded;
  if (cache::load_weyl_group(name(), loaded)) {
    if (static_cast<long>(loaded.size()) > lim.weyl_max)
      throw CapExceededError("Weyl group order exceeds cap " + std::to_string(lim.weyl_max));
    d_->weyl = std::move(loaded);
    return d_->weyl;
  }

  int n = d_->rank;
  std::vector<std::vector<long>> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<long> s(static_cast<std::size_t>(n * n), 0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        s[static_cast<std::size_t>(r * n + c)] =
            (r == c ? 1 : 0) - (c == i ? d_->cartan[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] : 0);
    gens.push_back(std::move(s));
  }
  std::vector<long> id(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i * n + i)] = 1;

  std::map<std::vector<long>, int> index;
  std::vector<WeylElement> elems;
  elems.push_back(WeylElement{id, n, 1, 0});
  index.emplace(std::move(id), 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const WeylElement cur = elems[head];  // copy; elems may reallocate
    for (int g = 0; g < n; ++g) {
      std::vector<long> prod(static_cast<std::size_t>(n * n), 0);
      for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
          long grk = gens[static_cast<std::size_t>(g)][static_cast<std::size_t>(r * n + k)];
          if (grk == 0) continue;
          for (int c = 0; c < n; ++c)
            prod[static_cast<std::size_t>(r * n + c)] +=
                grk * cur.mat[static_cast<std::size_t>(k * n + c)];
        }
      if (index.count(prod)) continue;
      if (static_cast<long>(elems.size()) >= lim.weyl_max)
        throw CapExceededError("Weyl group order exceeds cap " + std::to_string(lim.weyl_max));
      WeylElement next{prod, n, -cur.sign, cur.length + 1};
      index.emplace(std::move(prod), static_cast<int>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  d_->weyl = std::move(elems);
  cache::store_weyl_group(name(), d_->weyl);
  return d_->weyl;
}

DiscriminantGroup RootSystem::discriminant_group() const {
  if (!simply_laced())
    throw InvalidInputError("discriminant_group: defined here for simply-laced systems only");
  DiscriminantGroup g{*this, dominant_weights_of_level(1), {}};
  int n = g.order();
  Rat det = rat_det(d_->cartan);
  if (Rat(n) != det) throw std::logic_error("discriminant_group: rep count != det(cartan)");
  g.add.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Weight sum = g.reps[static_cast<std::size_t>(i)] + g.reps[static_cast<std::size_t>(j)];
      int found = -1;
      for (int k = 0; k < n; ++k) {
        if (in_root_lattice(sum - g.reps[static_cast<std::size_t>(k)])) {
          if (found >= 0) throw std::logic_error("discriminant_group: ambiguous coset");
          found = k;
        }
      }
      if (found < 0) throw std::logic_error("discriminant_group: missing coset representative");
      g.add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = found;
    }
  return g;
}

int DiscriminantGroup::class_of(const Weight& w) const {
  int found = -1;
  for (int k = 0; k < order(); ++k) {
    if (rs.in_root_lattice(w - reps[static_cast<std::size_t>(k)])) {
      if (found >= 0) throw std::logic_error("DiscriminantGroup::class_of: ambiguous");
      found = k;
    }
  }
  if (found < 0) throw std::logic_error("DiscriminantGroup::class_of: no representative");
  return found;
}

int DiscriminantGroup::inverse_of(int i) const {
  for (int j = 0; j < order(); ++j)
    if (add[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) return j;
  throw std::logic_error("DiscriminantGroup::inverse_of: no inverse");
}

}  // namespace verlinde
