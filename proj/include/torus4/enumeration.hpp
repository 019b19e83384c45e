#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

namespace torus4 {

using BigInt = boost::multiprecision::cpp_int;

// Power series truncated after z^N, exact coefficients.
class Series {
 public:
  explicit Series(int N) : c_(N + 1) {}
  Series(int N, std::vector<BigInt> coeffs);
  static Series z(int N);
  static Series constant(int N, const BigInt& v);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& operator[](int i) const { return c_[i]; }
  BigInt& operator[](int i) { return c_[i]; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator*(const BigInt& k) const;
  // Exact division of every coefficient; throws Invariant when not exact.
  Series divided_by(const BigInt& k) const;
  // 1/this, constant term must be 1 or -1.
  Series inverse() const;
  Series pow(int k) const;
  // this(g), g must have no constant term.
  Series compose(const Series& g) const;
  bool operator==(const Series& o) const { return c_ == o.c_; }

 private:
  std::vector<BigInt> c_;
};

BigInt binomial(int n, int k);

Series ternary_series(int N);        // A = 1 + z A^3
BigInt ternary_closed(int n);        // C(3n,n)/(2n+1)
BigInt planar_closed(int n);         // 4/(n+1) C(3n+1,n)
Series planar_series(int N);         // 4 A^2

BigInt square_skeletons(int n);      // (3^n - (-1)^n)/4
BigInt hexagon_skeletons(int n);     // (n-2) 3^(n-1) + (5 3^(n-1) + (-1)^n)/4
BigInt skeletons(int n);             // ((-1)^(n-1) + (3+4n) 3^(n-1))/8
Series square_skeleton_series(int N);   // z/(1-2z-3z^2)
Series hexagon_skeleton_series(int N);  // 4z^2/((z+1)(3z-1)^2)
Series grand_motzkin(int N);            // 1/sqrt(1-2z-3z^2) by its recurrence

// [z^n] A^k by repeated convolution.
BigInt forest_count(int n, int k);
// Table F[n][k] for n <= N, k <= K.
std::vector<std::vector<BigInt>> forest_table(int N, int K);

// Convolution pipeline.
std::vector<BigInt> toroidal_counts(int N);  // T^t_c(0..N), index 0 is 0
std::vector<BigInt> total_counts(int N);     // T_h(0..N)
// Closed generating functions.
Series toroidal_closed_series(int N);  // (z - z^2 A^2)/((zA^2+1)(3zA^2-1)^2)
Series total_closed_series(int N);     // zA/(7zA^2 - 21zA + 9z + 1)
// Skeleton and forest route: (S^s(zA^2) + S^h(zA^2)/2)/A^2.
Series skeleton_forest_series(int N);

struct CountRow {
  int n;
  BigInt ternary, planar, square, hexagon, skeleton, toroidal, total;
};
std::vector<CountRow> count_table(int N);

}  // namespace torus4
