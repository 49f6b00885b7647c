#ifndef ACGC_TENSOR_HPP
#define ACGC_TENSOR_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace acgc {

// Thrown when an iterative scheme exhausts its budget before meeting its
// tolerance.
class convergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Eigenvalue triple of a diagonalized symmetric 3x3 tensor.  The same type
// carries moment spectra (nonnegative, sum 1) and concentration spectra
// (positive, determinant 1); operations state which reading they expect.
struct EigenTriple {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  EigenTriple() = default;
  EigenTriple(double a, double b, double c) : v{a, b, c} {}

  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }

  double sum() const { return v[0] + v[1] + v[2]; }
  double product() const { return v[0] * v[1] * v[2]; }
  double min_value() const;
  double max_value() const;
};

// Symmetric 3x3 tensor, six independent entries.
struct SymTensor2 {
  // order: 00, 11, 22, 01, 02, 12
  std::array<double, 6> m{};

  static constexpr std::size_t slot(std::size_t i, std::size_t j) {
    return i == j ? i : 2 + i + j;
  }
  double& operator()(std::size_t i, std::size_t j) { return m[slot(i, j)]; }
  double operator()(std::size_t i, std::size_t j) const { return m[slot(i, j)]; }

  EigenTriple diagonal() const { return {m[0], m[1], m[2]}; }
  double trace() const { return m[0] + m[1] + m[2]; }
};

namespace detail {

// The 15 sorted quartic multi-indices over {0,1,2}.
inline constexpr std::array<std::array<int, 4>, 15> kQuartics{{
    {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 2}, {0, 0, 1, 1}, {0, 0, 1, 2},
    {0, 0, 2, 2}, {0, 1, 1, 1}, {0, 1, 1, 2}, {0, 1, 2, 2}, {0, 2, 2, 2},
    {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 2}, {2, 2, 2, 2},
}};

constexpr int quartic_slot_of_sorted(const std::array<int, 4>& q) {
  for (int s = 0; s < 15; ++s)
    if (kQuartics[s][0] == q[0] && kQuartics[s][1] == q[1] &&
        kQuartics[s][2] == q[2] && kQuartics[s][3] == q[3])
      return s;
  return -1;
}

constexpr std::array<int, 81> make_quartic_table() {
  std::array<int, 81> t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          std::array<int, 4> q{i, j, k, l};
          for (int m = 1; m < 4; ++m)
            for (int n = m; n > 0 && q[n - 1] > q[n]; --n) {
              int tmp = q[n];
              q[n] = q[n - 1];
              q[n - 1] = tmp;
            }
          t[27 * i + 9 * j + 3 * k + l] = quartic_slot_of_sorted(q);
        }
  return t;
}

inline constexpr std::array<int, 81> kQuarticSlot = make_quartic_table();

}  // namespace detail

// Totally symmetric rank-4 tensor in three dimensions: 15 independent
// components stored against the sorted multi-index list above.
struct SymTensor4 {
  std::array<double, 15> m{};

  static constexpr std::size_t slot(std::size_t i, std::size_t j,
                                    std::size_t k, std::size_t l) {
    return static_cast<std::size_t>(
        detail::kQuarticSlot[27 * i + 9 * j + 3 * k + l]);
  }

  double& operator()(std::size_t i, std::size_t j, std::size_t k,
                     std::size_t l) {
    return m[slot(i, j, k, l)];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k,
                    std::size_t l) const {
    return m[slot(i, j, k, l)];
  }

  // The iijj face used by the closure formulas.
  double iijj(std::size_t i, std::size_t j) const {
    return (*this)(i, i, j, j);
  }

  // Sum over j of A_iijj.  Equals the second-moment eigenvalues for any
  // moment tensor of a distribution on the unit sphere.
  EigenTriple contract() const {
    EigenTriple c;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) c[i] += iijj(i, j);
    return c;
  }
};

inline double EigenTriple::min_value() const {
  double r = v[0];
  if (v[1] < r) r = v[1];
  if (v[2] < r) r = v[2];
  return r;
}

inline double EigenTriple::max_value() const {
  double r = v[0];
  if (v[1] > r) r = v[1];
  if (v[2] > r) r = v[2];
  return r;
}

// Closure evaluation paths.  Exact inverts the concentration spectrum;
// Planar and Unidirectional are the boundary formulas; the Asym variants are
// the axially symmetric asymptotic approximations.
enum class ClosureMethod {
  Exact,
  Planar,
  Unidirectional,
  Asym1,
  Asym2,
  Asym4,
  Asym5,
};

std::string to_string(ClosureMethod m);
ClosureMethod closure_method_from_string(const std::string& name);

}  // namespace acgc

#endif  // ACGC_TENSOR_HPP
