#include "d4cs/rootsystem.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "d4cs/errors.hpp"

namespace d4cs {

namespace {

RationalMatrix4 invert(const IntMatrix4& a) {
  // Gauss-Jordan over the rationals.
  std::array<std::array<mpq_class, 8>, 4> aug;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      aug[i][j] = a[i][j];
      aug[i][4 + j] = (i == j) ? 1 : 0;
    }
  }
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    while (pivot < 4 && aug[pivot][col] == 0) ++pivot;
    if (pivot == 4) throw InternalInconsistency("singular Cartan matrix");
    std::swap(aug[col], aug[pivot]);
    mpq_class inv = 1 / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (int row = 0; row < 4; ++row) {
      if (row == col || aug[row][col] == 0) continue;
      mpq_class factor = aug[row][col];
      for (int k = 0; k < 8; ++k) aug[row][k] -= factor * aug[col][k];
    }
  }
  RationalMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = aug[i][4 + j];
  return out;
}

CartanData build_d4() {
  CartanData data;
  data.cartan = {{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}};
  data.inverse_cartan = invert(data.cartan);
  data.weyl_vector = WeightVector{{1, 1, 1, 1}};
  return data;
}

std::string join4(const std::array<int, 4>& c) {
  std::ostringstream os;
  os << "(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
  return os.str();
}

}  // namespace

bool WeightVector::dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

std::string WeightVector::to_string() const { return join4(coords); }

WeightVector WeightVector::operator+(const WeightVector& o) const {
  WeightVector r;
  for (int i = 0; i < 4; ++i) r.coords[i] = coords[i] + o.coords[i];
  return r;
}

WeightVector WeightVector::operator-(const WeightVector& o) const {
  WeightVector r;
  for (int i = 0; i < 4; ++i) r.coords[i] = coords[i] - o.coords[i];
  return r;
}

WeightVector WeightVector::operator-() const {
  WeightVector r;
  for (int i = 0; i < 4; ++i) r.coords[i] = -coords[i];
  return r;
}

bool RootVector::nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

std::string RootVector::to_string() const { return join4(coords); }

RootVector RootVector::operator+(const RootVector& o) const {
  RootVector r;
  for (int i = 0; i < 4; ++i) r.coords[i] = coords[i] + o.coords[i];
  return r;
}

RootVector RootVector::operator-(const RootVector& o) const {
  RootVector r;
  for (int i = 0; i < 4; ++i) r.coords[i] = coords[i] - o.coords[i];
  return r;
}

const CartanData& d4() {
  static const CartanData data = build_d4();
  return data;
}

const std::vector<RootVector>& positive_roots() {
  static const std::vector<RootVector> roots = [] {
    std::vector<RootVector> r = {
        {{1, 0, 0, 0}}, {{0, 1, 0, 0}}, {{0, 0, 1, 0}}, {{0, 0, 0, 1}},
        {{1, 1, 0, 0}}, {{0, 1, 1, 0}}, {{0, 1, 0, 1}},
        {{1, 1, 1, 0}}, {{1, 1, 0, 1}}, {{0, 1, 1, 1}},
        {{1, 1, 1, 1}},
        {{1, 2, 1, 1}},
    };
    std::sort(r.begin(), r.end(), [](const RootVector& a, const RootVector& b) {
      if (a.height() != b.height()) return a.height() < b.height();
      return a.coords < b.coords;
    });
    return r;
  }();
  return roots;
}

WeightVector root_to_weight(const RootVector& r) {
  const auto& a = d4().cartan;
  WeightVector w;
  for (int j = 0; j < 4; ++j) {
    int s = 0;
    for (int i = 0; i < 4; ++i) s += a[j][i] * r.coords[i];
    w.coords[j] = s;
  }
  return w;
}

RootVector weight_to_root(const WeightVector& w) {
  const auto& inv = d4().inverse_cartan;
  RootVector r;
  for (int i = 0; i < 4; ++i) {
    mpq_class s = 0;
    for (int j = 0; j < 4; ++j) s += inv[i][j] * w.coords[j];
    if (s.get_den() != 1) {
      throw std::invalid_argument("weight " + w.to_string() + " is not in the root lattice");
    }
    r.coords[i] = static_cast<int>(s.get_num().get_si());
  }
  return r;
}

mpq_class inner_product(const WeightVector& w1, const WeightVector& w2) {
  const auto& inv = d4().inverse_cartan;
  mpq_class s = 0;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) s += inv[j][k] * w1.coords[j] * w2.coords[k];
  return s;
}

int pairing(const RootVector& r, const WeightVector& w) {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += r.coords[i] * w.coords[i];
  return s;
}

mpz_class weyl_dimension(const WeightVector& m) {
  if (!m.dominant()) throw NotDominant("weyl_dimension: " + m.to_string() + " is not dominant");
  const WeightVector shifted = m + d4().weyl_vector;
  mpq_class prod = 1;
  for (const auto& alpha : positive_roots()) {
    prod *= mpq_class(pairing(alpha, shifted), pairing(alpha, d4().weyl_vector));
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw InternalInconsistency("non-integral Weyl dimension");
  return prod.get_num();
}

const std::array<TrialityPerm, 6>& triality_group() {
  static const std::array<TrialityPerm, 6> group = {{
      {0, 1, 2, 3},  // identity
      {2, 1, 0, 3},  // (1 3)
      {3, 1, 2, 0},  // (1 4)
      {0, 1, 3, 2},  // (3 4)
      {2, 1, 3, 0},  // (1 3 4)
      {3, 1, 0, 2},  // (1 4 3)
  }};
  return group;
}

void check_triality(const TrialityPerm& perm) {
  if (perm[1] != 1) throw std::invalid_argument("triality permutation must fix node 2");
  std::array<bool, 4> seen{};
  for (int p : perm) {
    if (p < 0 || p > 3 || seen[p]) throw std::invalid_argument("not a permutation of {1,3,4}");
    seen[p] = true;
  }
}

WeightVector triality_permute(const WeightVector& m, const TrialityPerm& perm) {
  check_triality(perm);
  WeightVector out;
  for (int i = 0; i < 4; ++i) out.coords[perm[i]] = m.coords[i];
  return out;
}

WeightVector parse_weight(const std::string& text) {
  WeightVector w;
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t next = text.find(',', pos);
    if ((i < 3) != (next != std::string::npos)) {
      throw std::invalid_argument("expected four comma-separated integers: '" + text + "'");
    }
    std::string field = text.substr(pos, i < 3 ? next - pos : std::string::npos);
    const char* first = field.data();
    const char* last = field.data() + field.size();
    while (first < last && *first == ' ') ++first;
    while (last > first && last[-1] == ' ') --last;
    auto [ptr, ec] = std::from_chars(first, last, w.coords[i]);
    if (ec != std::errc() || ptr != last) {
      throw std::invalid_argument("bad integer '" + field + "' in '" + text + "'");
    }
    pos = next + 1;
  }
  return w;
}

std::vector<WeightVector> dominant_weights_up_to(int max_sum) {
  std::vector<WeightVector> out;
  for (int a = 0; a <= max_sum; ++a)
    for (int b = 0; a + b <= max_sum; ++b)
      for (int c = 0; a + b + c <= max_sum; ++c)
        for (int d = 0; a + b + c + d <= max_sum; ++d) out.push_back(WeightVector{{a, b, c, d}});
  return out;
}

}  // namespace d4cs
