#pragma once

#include <string>

#include "zalpha/centralizer.hpp"
#include "zalpha/core_linalg.hpp"

#include <json.hpp>

namespace zalpha {

// ---------------------------------------------------------------------------
// Desk-scale model of the factorization ideal: membership in c_alpha is
// witnessed by an explicit factorization T = B * A through a finite Z_alpha
// section. The section tag is data: the model verifies the algebra of
// certificates, not the geometry of the infinite-dimensional spaces.
// ---------------------------------------------------------------------------

/// T: p x q, A: (2 zdim) x q into the section, B: p x (2 zdim) out of it.
/// Section coordinates are the pair (x, y) concatenated: first zdim entries
/// x, last zdim entries y.
struct FactorizationCertificate {
  DenseOperator T;
  DenseOperator A;
  DenseOperator B;
  Alpha alpha;
  std::size_t zdim = 0;
};

/// Shape-compatibility check; throws std::invalid_argument with a message
/// naming the offending dimension. Distinct from verification failure.
void check_certificate_shapes(const FactorizationCertificate& c);

/// Relative factorization residual ||B A - T||_F / (1 + ||T||_F).
/// Throws on shape mismatch.
double certificate_defect(const FactorizationCertificate& c);

/// True iff certificate_defect(c) <= 1e-9.
bool verify_certificate(const FactorizationCertificate& c);

/// Two-sided composition: a certificate for R T S with A' = A S, B' = R B.
FactorizationCertificate compose_certificate(const DenseOperator& R,
                                             const FactorizationCertificate& c,
                                             const DenseOperator& S);

/// Additive closure through a single section of length zdim1 + zdim2: stack
/// (A1, A2), interleave the two sections into one with the coordinate
/// permutation, and undo it in front of (B1, B2). Requires equal operator
/// shapes and equal alpha.
FactorizationCertificate sum_certificate(const FactorizationCertificate& c1,
                                         const FactorizationCertificate& c2);

/// Entrywise conjugated T, A, B tagged with -alpha; an involution.
FactorizationCertificate conjugate_certificate(const FactorizationCertificate& c);

/// The 2(n1+n2) x 2(n1+n2) permutation used by sum_certificate: maps the
/// concatenated pair coordinates (x1, y1, x2, y2) to (interleave(x1, x2),
/// interleave(y1, y2)). Interleaving alternates while both sequences last,
/// then appends the rest.
DenseOperator pair_interleave_matrix(std::size_t n1, std::size_t n2);

// JSON document {"alpha", "zdim", "T", "A", "B"}, matrices as row-major
// arrays of [re, im] pairs. Shapes are recovered from array lengths and zdim,
// so all dimensions must be positive. Round-trips are bit-exact for finite
// doubles.
nlohmann::json certificate_to_json(const FactorizationCertificate& c);
FactorizationCertificate certificate_from_json(const nlohmann::json& j);

void save_certificate(const std::string& path, const FactorizationCertificate& c);
FactorizationCertificate load_certificate(const std::string& path);

}  // namespace zalpha
