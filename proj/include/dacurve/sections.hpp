#pragma once

#include <string>
#include <vector>

#include "dacurve/laurent.hpp"
#include "dacurve/monomial.hpp"

namespace dacurve::sections {

// Label of a basis element of the m-th pluricanonical space of the balanced
// double A-curve: omega_i / eta_i (pure parts supported on the outer
// components) and chi_d (mixed part, indexed by weighted degree).
struct PluriLabel {
    enum class Kind { Omega, Eta, Chi };
    Kind kind;
    long long index;

    bool operator==(const PluriLabel&) const = default;
    bool operator<(const PluriLabel& rhs) const {
        if (kind != rhs.kind) return static_cast<int>(kind) < static_cast<int>(rhs.kind);
        return index < rhs.index;
    }
    std::string str() const;
};

// A twist-m section of the curve written on the normalization: the triple
// (f0*(ds_0)^m, f1*(ds_1)^m, f2*(ds_2)^m) with f_i Laurent in the uniformizer
// s_i of the i-th projective line at 0. The gluing convention at the first
// singularity identifies t_0 = 1/s_0 (so dt_0 = -ds_0/s_0^2); signs from the
// (t^{k+1}, -s^{k+1}) gluing never enter componentwise products.
struct SectionTriple {
    int k = 0;
    int m = 0;  // twist level
    LaurentPoly f0, f1, f2;

    bool is_zero() const { return f0.is_zero() && f1.is_zero() && f2.is_zero(); }
    bool operator==(const SectionTriple&) const = default;
    SectionTriple operator*(const SectionTriple& rhs) const;  // twists add
    SectionTriple operator-(const SectionTriple& rhs) const;  // same twist
    SectionTriple scaled(const Rat& c) const;
    std::string str() const;
};

// The 2k twist-1 sections x_1..x_k, y_1..y_k:
//   x_i = (s_0^{i-1} ds_0, ds_1/s_1^{i+1}, 0)
//   y_i = (0, s_1^{i-1} ds_1, ds_2/s_2^{i+1})
SectionTriple section_x(int k, int i);
SectionTriple section_y(int k, int i);
std::vector<SectionTriple> canonical_basis(int k);  // k >= 2; x block then y block

SectionTriple product(const std::vector<SectionTriple>& factors);
SectionTriple section_of_monomial(const Monomial& mon);

// Classification of a degree-m monomial by the section its product realizes:
// pure-x -> (omega, sum (i-1)a_i), pure-y -> (eta, sum (i-1)b_i),
// mixed -> (chi, weighted degree). The scalar relates the product to the
// canonical representative of the label (it is 1 under these conventions,
// and is verified against the actual Laurent product).
struct Classification {
    PluriLabel label;
    Rat scalar;
};
Classification classify_monomial(const Monomial& mon, int m);

// Fixed representatives:
//   omega_i = (s_0^i (ds_0)^m, (ds_1)^m / s_1^{2m+i}, 0)
//   eta_i   = (0, s_1^i (ds_1)^m, (ds_2)^m / s_2^{2m+i})
//   chi_d   = (0, s_1^{-d-m} (ds_1)^m, 0)
SectionTriple canonical_representative(int k, int m, const PluriLabel& label);

struct LabeledSection {
    PluriLabel label;
    Monomial witness;  // a degree-m monomial whose product realizes the section
    SectionTriple section;
};
// The (2m-1)(2k-1) basis sections, omega block / eta block / chi block,
// ascending index within each block. k >= 2, m >= 2.
std::vector<LabeledSection> pluricanonical_basis(int k, int m);

// The 2x2 minors of the scroll matrix
//   ( x_1 ... x_{k-1} | y_k ... y_2 )
//   ( x_2 ... x_k     | y_{k-1} ... y_1 )
// evaluated as twist-2 section identities. For k = 2 the x-interior of the
// matrix is empty and the check is skipped with a note.
struct MinorCheck {
    int col1 = 0, col2 = 0;  // 0-based column indices
    bool zero = false;
};
struct MinorReport {
    int k = 0;
    bool skipped = false;
    std::string note;
    std::vector<MinorCheck> minors;
    bool all_zero = false;
};
MinorReport scroll_minor_check(int k);

// The two cotangent-span identities at the first singularity, checked on the
// chart covering C_0 \ 0 and C_1 \ infinity:
//   y_1     = (0, s_1^{k+1}) . x_k
//   x_{k-1} = (t_0, s_1)     . x_k        (t_0 = 1/s_0)
struct SpanReport {
    bool y1_identity = false;
    bool xk_identity = false;
    bool pass() const { return y1_identity && xk_identity; }
};
SpanReport cotangent_span_check(int k);

// Torus weights of the canonical coordinates: (1..k, -1..-k). The flag
// records that all 2k characters are distinct (multiplicity-free action).
struct TorusWeights {
    std::vector<long long> weights;
    bool multiplicity_free = false;
};
TorusWeights torus_weights(int k);

// Audit of the closed-form exponent tables against the witness products.
// One quoted variant (omega_1 with middle denominator s_1^{2m-1}) fails the
// product realization and is flagged as a suspected transcription slip; the
// constructed basis uses the product-consistent exponent 2m+1.
struct ExponentAuditEntry {
    std::string element;
    long long quoted_exponent = 0;       // quoted middle-component exponent of 1/s_1
    long long constructed_exponent = 0;  // exponent forced by the witness product
    bool consistent = false;
    std::string note;
};
std::vector<ExponentAuditEntry> exponent_audit(int k, int m);

}  // namespace dacurve::sections
