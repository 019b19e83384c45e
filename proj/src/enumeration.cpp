#include "torus4/enumeration.hpp"

#include "torus4/error.hpp"

namespace torus4 {

Series::Series(int N, std::vector<BigInt> coeffs) : c_(N + 1) {
  for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
}

Series Series::z(int N) {
  Series s(N);
  if (N >= 1) s[1] = 1;
  return s;
}

Series Series::constant(int N, const BigInt& v) {
  Series s(N);
  s[0] = v;
  return s;
}

Series Series::operator+(const Series& o) const {
  Series r(order());
  for (int i = 0; i <= order(); ++i) r[i] = c_[i] + o[i];
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r(order());
  for (int i = 0; i <= order(); ++i) r[i] = c_[i] - o[i];
  return r;
}

Series Series::operator*(const Series& o) const {
  Series r(order());
  for (int i = 0; i <= order(); ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= order(); ++j) r[i + j] += c_[i] * o[j];
  }
  return r;
}

Series Series::operator*(const BigInt& k) const {
  Series r(order());
  for (int i = 0; i <= order(); ++i) r[i] = c_[i] * k;
  return r;
}

Series Series::divided_by(const BigInt& k) const {
  Series r(order());
  for (int i = 0; i <= order(); ++i) {
    require(c_[i] % k == 0, ErrorKind::Invariant, "series coefficient " + std::to_string(i) + " not divisible");
    r[i] = c_[i] / k;
  }
  return r;
}

Series Series::inverse() const {
  require(c_[0] == 1 || c_[0] == -1, ErrorKind::Precondition, "constant term is not a unit");
  Series r(order());
  r[0] = c_[0];  // 1/1 or 1/-1
  for (int n = 1; n <= order(); ++n) {
    BigInt s = 0;
    for (int k = 1; k <= n; ++k) s += c_[k] * r[n - k];
    r[n] = -s * c_[0];
  }
  return r;
}

Series Series::pow(int k) const {
  Series r = constant(order(), 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Series Series::compose(const Series& g) const {
  require(g[0] == 0, ErrorKind::Precondition, "inner series must vanish at 0");
  Series r(order()), p = constant(order(), 1);
  for (int k = 0; k <= order(); ++k) {
    r = r + p * c_[k];
    p = p * g;
  }
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Series ternary_series(int N) {
  Series a = Series::constant(N, 1), z = Series::z(N);
  // each round fixes one more coefficient
  for (int i = 0; i <= N; ++i) a = Series::constant(N, 1) + z * a.pow(3);
  return a;
}

BigInt ternary_closed(int n) { return binomial(3 * n, n) / (2 * n + 1); }

BigInt planar_closed(int n) { return 4 * binomial(3 * n + 1, n) / (n + 1); }

Series planar_series(int N) { return ternary_series(N).pow(2) * BigInt(4); }

namespace {

BigInt pow3(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

int sign(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

BigInt square_skeletons(int n) {
  require(n >= 1, ErrorKind::Precondition, "skeleton size starts at 1");
  return (pow3(n) - sign(n)) / 4;
}

BigInt hexagon_skeletons(int n) {
  require(n >= 1, ErrorKind::Precondition, "skeleton size starts at 1");
  return BigInt(n - 2) * pow3(n - 1) + (5 * pow3(n - 1) + sign(n)) / 4;
}

BigInt skeletons(int n) {
  require(n >= 1, ErrorKind::Precondition, "skeleton size starts at 1");
  BigInt num = sign(n - 1) + BigInt(3 + 4 * n) * pow3(n - 1);
  require(num % 8 == 0, ErrorKind::Invariant, "skeleton count not integral");
  return num / 8;
}

Series square_skeleton_series(int N) {
  Series den(N, {1, -2, -3});
  return Series::z(N) * den.inverse();
}

Series hexagon_skeleton_series(int N) {
  Series a(N, {1, 1}), b(N, {1, -3});
  Series num(N, {0, 0, 4});
  return num * (a * b * b).inverse();
}

Series grand_motzkin(int N) {
  Series g(N);
  g[0] = 1;
  if (N >= 1) g[1] = 1;
  for (int n = 1; n < N; ++n) {
    BigInt v = (2 * n + 1) * g[n] + 3 * n * g[n - 1];
    require(v % (n + 1) == 0, ErrorKind::Invariant, "Motzkin recurrence not integral");
    g[n + 1] = v / (n + 1);
  }
  return g;
}

std::vector<std::vector<BigInt>> forest_table(int N, int K) {
  Series a = ternary_series(N);
  std::vector<std::vector<BigInt>> f(N + 1, std::vector<BigInt>(K + 1));
  Series p = Series::constant(N, 1);
  for (int k = 0; k <= K; ++k) {
    for (int n = 0; n <= N; ++n) f[n][k] = p[n];
    p = p * a;
  }
  return f;
}

BigInt forest_count(int n, int k) {
  require(n >= 0 && k >= 0, ErrorKind::Precondition, "negative forest index");
  return forest_table(n, k)[n][k];
}

std::vector<BigInt> toroidal_counts(int N) {
  auto f = forest_table(N, std::max(0, 2 * N - 2));
  std::vector<BigInt> t(N + 1);
  for (int n = 1; n <= N; ++n)
    for (int k = 1; k <= n; ++k) t[n] += skeletons(k) * f[n - k][2 * k - 2];
  return t;
}

std::vector<BigInt> total_counts(int N) {
  auto t = toroidal_counts(N);
  Series p = planar_series(N);
  std::vector<BigInt> out(N + 1);
  for (int n = 0; n <= N; ++n) {
    BigInt s = 0;
    for (int k = 1; k <= n; ++k) s += p[n - k] * t[k];
    require(s % 4 == 0, ErrorKind::Invariant, "total count not divisible by 4 at n=" + std::to_string(n));
    out[n] = s / 4;
  }
  return out;
}

Series toroidal_closed_series(int N) {
  Series a = ternary_series(N), z = Series::z(N), one = Series::constant(N, 1);
  Series za2 = z * a * a;
  Series num = z - z * za2;
  Series t = za2 * BigInt(3) - one;
  return num * ((za2 + one) * t * t).inverse();
}

Series total_closed_series(int N) {
  Series a = ternary_series(N), z = Series::z(N), one = Series::constant(N, 1);
  Series den = z * a * a * BigInt(7) - z * a * BigInt(21) + z * BigInt(9) + one;
  return z * a * den.inverse();
}

Series skeleton_forest_series(int N) {
  Series a = ternary_series(N), z = Series::z(N);
  Series u = z * a * a;
  Series inv_a2 = (a * a).inverse();
  Series ms = square_skeleton_series(N).compose(u) * inv_a2;
  Series mh = hexagon_skeleton_series(N).compose(u) * inv_a2;
  return ms + mh.divided_by(2);
}

std::vector<CountRow> count_table(int N) {
  Series a = ternary_series(N), p = planar_series(N);
  auto t = toroidal_counts(N);
  auto th = total_counts(N);
  std::vector<CountRow> rows;
  for (int n = 0; n <= N; ++n) {
    CountRow r{n, a[n], p[n], 0, 0, 0, t[n], th[n]};
    if (n >= 1) {
      r.square = square_skeletons(n);
      r.hexagon = hexagon_skeletons(n);
      r.skeleton = skeletons(n);
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace torus4
