#ifndef GKT_LINALG_HPP
#define GKT_LINALG_HPP

#include "gkt/field.hpp"
#include "gkt/grade.hpp"

#include <string>
#include <vector>

namespace gkt {

/// Product of |T| copies of the coefficient field, indexed by component
/// labels in a fixed order.
struct SemisimpleRing {
    std::vector<std::string> components; // nonempty, unique, in declaration order
    Field field;

    std::size_t index_of(const std::string& label) const;
    void validate() const;
    bool operator==(const SemisimpleRing&) const = default;
};

/// Element of k^T: one field scalar per component.
struct RingElem {
    std::vector<Rational> comps;

    bool operator==(const RingElem&) const = default;
};

RingElem r_zero(const SemisimpleRing& R);
RingElem r_one(const SemisimpleRing& R);
RingElem r_eps(const SemisimpleRing& R, const std::string& label);
bool r_is_zero(const SemisimpleRing& R, const RingElem& a);
RingElem r_add(const SemisimpleRing& R, const RingElem& a, const RingElem& b);
RingElem r_mul(const SemisimpleRing& R, const RingElem& a, const RingElem& b);
RingElem r_sub(const SemisimpleRing& R, const RingElem& a, const RingElem& b);

/// Dense matrix over k^T.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<RingElem> a; // row-major

    RingElem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const RingElem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    bool operator==(const Mat&) const = default;
};

Mat m_zero(const SemisimpleRing& R, std::size_t rows, std::size_t cols);
Mat m_identity(const SemisimpleRing& R, std::size_t n);
Mat m_mul(const SemisimpleRing& R, const Mat& x, const Mat& y);

/// Homogeneous degree-zero idempotent matrix over k^T with a shift vector.
struct ShiftedIdempotent {
    SemisimpleRing ring;
    std::vector<GradeElement> shifts; // length n
    Mat entries;                      // n x n

    std::size_t size() const { return shifts.size(); }
    bool operator==(const ShiftedIdempotent&) const = default;
};

struct IdempotentReport {
    bool ok = false;
    std::vector<std::string> violations;
};

/// Checks e*e = e exactly and entry (i,j) = 0 whenever shifts differ.
IdempotentReport validate_idempotent(const GradeGroup& g, const ShiftedIdempotent& e);

/// Throwing construction (validates).
ShiftedIdempotent make_idempotent(const GradeGroup& g, SemisimpleRing ring,
                                  std::vector<GradeElement> shifts, Mat entries);

/// Slot list (component label, shift) of a canonical diagonal idempotent
/// diag(eps_{t_1}, ..., eps_{t_r}).
struct DiagonalIdempotent {
    std::vector<std::pair<std::string, GradeElement>> slots;

    bool operator==(const DiagonalIdempotent&) const = default;
};

/// x (n x r) and y (r x n) with x*y = e and y*x = diag(slots).
struct EquivalenceWitness {
    Mat x, y;
};

struct DiagonalizeResult {
    DiagonalIdempotent diagonal;
    EquivalenceWitness witness;
};

/// Per component, rank-factorizes e_t via row reduction with left-to-right
/// pivoting; slots are emitted component by component, pivots left to right.
DiagonalizeResult diagonalize(const GradeGroup& g, const ShiftedIdempotent& e);

/// The n x n diagonal matrix idempotent determined by a slot list.
ShiftedIdempotent diagonal_idempotent(const GradeGroup& g, const SemisimpleRing& R,
                                      const DiagonalIdempotent& d);

} // namespace gkt

#endif
