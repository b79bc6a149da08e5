#include "zalpha/ideal.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace zalpha {

namespace {

DenseOperator matsub(const DenseOperator& lhs, const DenseOperator& rhs) {
  DenseOperator out(lhs.rows(), lhs.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i)
    out.data()[i] = lhs.data()[i] - rhs.data()[i];
  return out;
}

}  // namespace

void check_certificate_shapes(const FactorizationCertificate& c) {
  if (c.A.rows() != 2 * c.zdim)
    throw std::invalid_argument("certificate: A must have 2*zdim rows");
  if (c.B.cols() != 2 * c.zdim)
    throw std::invalid_argument("certificate: B must have 2*zdim columns");
  if (c.A.cols() != c.T.cols())
    throw std::invalid_argument("certificate: A and T must have equal columns");
  if (c.B.rows() != c.T.rows())
    throw std::invalid_argument("certificate: B and T must have equal rows");
  if (!std::isfinite(c.alpha.value))
    throw std::invalid_argument("certificate: alpha must be finite");
}

double certificate_defect(const FactorizationCertificate& c) {
  check_certificate_shapes(c);
  return frobenius_norm(matsub(matmul(c.B, c.A), c.T)) / (1.0 + frobenius_norm(c.T));
}

bool verify_certificate(const FactorizationCertificate& c) {
  return certificate_defect(c) <= 1e-9;
}

FactorizationCertificate compose_certificate(const DenseOperator& R,
                                             const FactorizationCertificate& c,
                                             const DenseOperator& S) {
  check_certificate_shapes(c);
  if (R.cols() != c.T.rows())
    throw std::invalid_argument("compose_certificate: R does not accept T's codomain");
  if (S.rows() != c.T.cols())
    throw std::invalid_argument("compose_certificate: S does not map into T's domain");
  FactorizationCertificate out;
  out.T = matmul(R, matmul(c.T, S));
  out.A = matmul(c.A, S);
  out.B = matmul(R, c.B);
  out.alpha = c.alpha;
  out.zdim = c.zdim;
  return out;
}

DenseOperator pair_interleave_matrix(std::size_t n1, std::size_t n2) {
  const std::size_t n = n1 + n2;
  // interleaved position of element k of the first sequence and of the second
  auto first_pos = [&](std::size_t k) { return (k < n2) ? 2 * k : n2 + k; };
  auto second_pos = [&](std::size_t k) { return (k < n1) ? 2 * k + 1 : n1 + k; };
  DenseOperator P(2 * n, 2 * n);
  for (std::size_t k = 0; k < n1; ++k) {
    P.at(first_pos(k), k) = Complex(1.0, 0.0);              // x1 -> x
    P.at(n + first_pos(k), n1 + k) = Complex(1.0, 0.0);     // y1 -> y
  }
  for (std::size_t k = 0; k < n2; ++k) {
    P.at(second_pos(k), 2 * n1 + k) = Complex(1.0, 0.0);          // x2 -> x
    P.at(n + second_pos(k), 2 * n1 + n2 + k) = Complex(1.0, 0.0); // y2 -> y
  }
  return P;
}

FactorizationCertificate sum_certificate(const FactorizationCertificate& c1,
                                         const FactorizationCertificate& c2) {
  check_certificate_shapes(c1);
  check_certificate_shapes(c2);
  if (c1.T.rows() != c2.T.rows() || c1.T.cols() != c2.T.cols())
    throw std::invalid_argument("sum_certificate: operator shapes differ");
  if (c1.alpha != c2.alpha)
    throw std::invalid_argument("sum_certificate: mismatched alpha");

  const std::size_t n1 = c1.zdim;
  const std::size_t n2 = c2.zdim;
  const std::size_t q = c1.T.cols();
  const std::size_t p = c1.T.rows();

  // stacked route x -> (A1 x, A2 x), section coordinates (x1, y1, x2, y2)
  DenseOperator stacked(2 * (n1 + n2), q);
  for (std::size_t i = 0; i < 2 * n1; ++i)
    for (std::size_t j = 0; j < q; ++j) stacked.at(i, j) = c1.A.at(i, j);
  for (std::size_t i = 0; i < 2 * n2; ++i)
    for (std::size_t j = 0; j < q; ++j) stacked.at(2 * n1 + i, j) = c2.A.at(i, j);

  // summed exit (B1, B2) on the un-interleaved coordinates
  DenseOperator exit(p, 2 * (n1 + n2));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < 2 * n1; ++j) exit.at(i, j) = c1.B.at(i, j);
    for (std::size_t j = 0; j < 2 * n2; ++j) exit.at(i, 2 * n1 + j) = c2.B.at(i, j);
  }

  const DenseOperator P = pair_interleave_matrix(n1, n2);
  // P is a permutation, so its inverse is its transpose
  DenseOperator Pt(P.cols(), P.rows());
  for (std::size_t i = 0; i < P.rows(); ++i)
    for (std::size_t j = 0; j < P.cols(); ++j) Pt.at(j, i) = P.at(i, j);

  FactorizationCertificate out;
  out.T = matadd(c1.T, c2.T);
  out.A = matmul(P, stacked);
  out.B = matmul(exit, Pt);
  out.alpha = c1.alpha;
  out.zdim = n1 + n2;
  return out;
}

FactorizationCertificate conjugate_certificate(const FactorizationCertificate& c) {
  FactorizationCertificate out;
  out.T = conj(c.T);
  out.A = conj(c.A);
  out.B = conj(c.B);
  out.alpha = Alpha{-c.alpha.value};
  out.zdim = c.zdim;
  return out;
}

namespace {

nlohmann::json matrix_to_json(const DenseOperator& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Complex& z : m.data())
    arr.push_back(nlohmann::json::array({z.real(), z.imag()}));
  return arr;
}

std::vector<Complex> entries_from_json(const nlohmann::json& arr, const char* key) {
  if (!arr.is_array())
    throw std::runtime_error(std::string("certificate json: ") + key + " must be an array");
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw std::runtime_error(std::string("certificate json: ") + key +
                               " entries must be [re, im] pairs");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

DenseOperator shaped(std::vector<Complex> entries, std::size_t rows, std::size_t cols,
                     const char* key) {
  if (entries.size() != rows * cols)
    throw std::runtime_error(std::string("certificate json: ") + key +
                             " length inconsistent with inferred shape");
  DenseOperator m(rows, cols);
  m.data() = std::move(entries);
  return m;
}

}  // namespace

nlohmann::json certificate_to_json(const FactorizationCertificate& c) {
  check_certificate_shapes(c);
  if (c.zdim == 0 || c.T.rows() == 0 || c.T.cols() == 0)
    throw std::invalid_argument("certificate json: all dimensions must be positive");
  nlohmann::json j;
  j["alpha"] = c.alpha.value;
  j["zdim"] = c.zdim;
  j["T"] = matrix_to_json(c.T);
  j["A"] = matrix_to_json(c.A);
  j["B"] = matrix_to_json(c.B);
  return j;
}

FactorizationCertificate certificate_from_json(const nlohmann::json& j) {
  for (const char* key : {"alpha", "zdim", "T", "A", "B"})
    if (!j.contains(key))
      throw std::runtime_error(std::string("certificate json: missing key ") + key);
  if (!j["alpha"].is_number())
    throw std::runtime_error("certificate json: alpha must be a number");
  if (!j["zdim"].is_number_unsigned() || j["zdim"].get<std::size_t>() == 0)
    throw std::runtime_error("certificate json: zdim must be a positive integer");

  FactorizationCertificate c;
  c.alpha = Alpha{j["alpha"].get<double>()};
  c.zdim = j["zdim"].get<std::size_t>();

  auto a_entries = entries_from_json(j["A"], "A");
  auto b_entries = entries_from_json(j["B"], "B");
  auto t_entries = entries_from_json(j["T"], "T");
  const std::size_t section = 2 * c.zdim;
  if (a_entries.empty() || a_entries.size() % section != 0)
    throw std::runtime_error("certificate json: A length not divisible by 2*zdim");
  if (b_entries.empty() || b_entries.size() % section != 0)
    throw std::runtime_error("certificate json: B length not divisible by 2*zdim");
  const std::size_t q = a_entries.size() / section;
  const std::size_t p = b_entries.size() / section;
  c.A = shaped(std::move(a_entries), section, q, "A");
  c.B = shaped(std::move(b_entries), p, section, "B");
  c.T = shaped(std::move(t_entries), p, q, "T");

  for (const DenseOperator* m : {&c.T, &c.A, &c.B})
    if (!all_finite(m->data()))
      throw std::runtime_error("certificate json: entries must be finite");
  check_certificate_shapes(c);
  return c;
}

void save_certificate(const std::string& path, const FactorizationCertificate& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_certificate: cannot open " + path);
  out << certificate_to_json(c).dump(2) << '\n';
  if (!out) throw std::runtime_error("save_certificate: write failed for " + path);
}

FactorizationCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_certificate: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("load_certificate: invalid json in " + path + ": " + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace zalpha
