#include "gkt/linalg.hpp"

#include <algorithm>
#include <set>

namespace gkt {

std::size_t SemisimpleRing::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i] == label) return i;
    throw spec_error("unknown ring component '" + label + "'");
}

void SemisimpleRing::validate() const {
    if (components.empty()) throw spec_error("semisimple ring needs at least one component");
    std::set<std::string> seen;
    for (const auto& c : components) {
        if (c.empty()) throw spec_error("empty component label");
        if (!seen.insert(c).second) throw spec_error("duplicate component label '" + c + "'");
    }
}

RingElem r_zero(const SemisimpleRing& R) { return RingElem{std::vector<Rational>(R.components.size(), 0)}; }

RingElem r_one(const SemisimpleRing& R) { return RingElem{std::vector<Rational>(R.components.size(), 1)}; }

RingElem r_eps(const SemisimpleRing& R, const std::string& label) {
    RingElem e = r_zero(R);
    e.comps[R.index_of(label)] = 1;
    return e;
}

bool r_is_zero(const SemisimpleRing& R, const RingElem& a) {
    for (const auto& c : a.comps)
        if (!R.field.is_zero(c)) return false;
    return true;
}

static RingElem r_binary(const SemisimpleRing& R, const RingElem& a, const RingElem& b,
                         Rational (Field::*op)(const Rational&, const Rational&) const) {
    if (a.comps.size() != R.components.size() || b.comps.size() != R.components.size())
        throw spec_error("ring element has wrong component count");
    RingElem r = a;
    for (std::size_t i = 0; i < r.comps.size(); ++i) r.comps[i] = (R.field.*op)(r.comps[i], b.comps[i]);
    return r;
}

RingElem r_add(const SemisimpleRing& R, const RingElem& a, const RingElem& b) {
    return r_binary(R, a, b, &Field::add);
}
RingElem r_mul(const SemisimpleRing& R, const RingElem& a, const RingElem& b) {
    return r_binary(R, a, b, &Field::mul);
}
RingElem r_sub(const SemisimpleRing& R, const RingElem& a, const RingElem& b) {
    return r_binary(R, a, b, &Field::sub);
}

Mat m_zero(const SemisimpleRing& R, std::size_t rows, std::size_t cols) {
    Mat m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(rows * cols, r_zero(R));
    return m;
}

Mat m_identity(const SemisimpleRing& R, std::size_t n) {
    Mat m = m_zero(R, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = r_one(R);
    return m;
}

Mat m_mul(const SemisimpleRing& R, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw spec_error("matrix dimension mismatch");
    Mat m = m_zero(R, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (r_is_zero(R, x.at(i, k))) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                m.at(i, j) = r_add(R, m.at(i, j), r_mul(R, x.at(i, k), y.at(k, j)));
        }
    return m;
}

IdempotentReport validate_idempotent(const GradeGroup& g, const ShiftedIdempotent& e) {
    IdempotentReport rep;
    e.ring.validate();
    if (e.entries.rows != e.size() || e.entries.cols != e.size()) {
        rep.violations.push_back("matrix is not square of the shift vector's size");
        return rep;
    }
    for (const auto& s : e.shifts) g_check(g, s);
    Mat sq = m_mul(e.ring, e.entries, e.entries);
    if (!(sq == e.entries)) rep.violations.push_back("matrix is not idempotent");
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
            if (!(e.shifts[i] == e.shifts[j]) && !r_is_zero(e.ring, e.entries.at(i, j)))
                rep.violations.push_back("entry (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) +
                                         ") nonzero across distinct shifts");
    rep.ok = rep.violations.empty();
    return rep;
}

ShiftedIdempotent make_idempotent(const GradeGroup& g, SemisimpleRing ring,
                                  std::vector<GradeElement> shifts, Mat entries) {
    ShiftedIdempotent e{std::move(ring), std::move(shifts), std::move(entries)};
    IdempotentReport rep = validate_idempotent(g, e);
    if (!rep.ok) {
        std::string msg = "invalid idempotent:";
        for (const auto& v : rep.violations) msg += " " + v + ";";
        throw spec_error(msg);
    }
    return e;
}

DiagonalizeResult diagonalize(const GradeGroup& g, const ShiftedIdempotent& e) {
    IdempotentReport rep = validate_idempotent(g, e);
    if (!rep.ok) throw spec_error("diagonalize requires a valid idempotent");
    const SemisimpleRing& R = e.ring;
    const Field& f = R.field;
    const std::size_t n = e.size();

    DiagonalizeResult out;
    struct Slot {
        std::size_t comp;
        std::size_t pivot_col;
        std::vector<Rational> col;     // e_t[:, pivot]
        std::vector<Rational> rref_row; // reduced row with leading 1 at pivot
    };
    std::vector<Slot> slots;

    for (std::size_t t = 0; t < R.components.size(); ++t) {
        // Row-reduce the t-component of e to reduced echelon form.
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = f.normalize(e.entries.at(i, j).comps[t]);
        std::size_t rank = 0;
        std::vector<std::size_t> pivots;
        for (std::size_t col = 0; col < n && rank < n; ++col) {
            std::size_t piv = rank;
            while (piv < n && f.is_zero(m[piv][col])) ++piv;
            if (piv == n) continue;
            std::swap(m[piv], m[rank]);
            Rational inv = f.inv(m[rank][col]);
            for (std::size_t j = 0; j < n; ++j) m[rank][j] = f.mul(m[rank][j], inv);
            for (std::size_t r2 = 0; r2 < n; ++r2) {
                if (r2 == rank || f.is_zero(m[r2][col])) continue;
                Rational factor = m[r2][col];
                for (std::size_t j = 0; j < n; ++j)
                    m[r2][j] = f.sub(m[r2][j], f.mul(factor, m[rank][j]));
            }
            pivots.push_back(col);
            ++rank;
        }
        for (std::size_t s = 0; s < rank; ++s) {
            Slot slot;
            slot.comp = t;
            slot.pivot_col = pivots[s];
            slot.col.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                slot.col[i] = f.normalize(e.entries.at(i, pivots[s]).comps[t]);
            slot.rref_row = m[s];
            slots.push_back(std::move(slot));
        }
    }

    const std::size_t r = slots.size();
    out.witness.x = m_zero(R, n, r);
    out.witness.y = m_zero(R, r, n);
    for (std::size_t s = 0; s < r; ++s) {
        const Slot& slot = slots[s];
        out.diagonal.slots.emplace_back(R.components[slot.comp], e.shifts[slot.pivot_col]);
        for (std::size_t i = 0; i < n; ++i) {
            out.witness.x.at(i, s).comps[slot.comp] = slot.col[i];
            out.witness.y.at(s, i).comps[slot.comp] = slot.rref_row[i];
        }
    }
    return out;
}

ShiftedIdempotent diagonal_idempotent(const GradeGroup& g, const SemisimpleRing& R,
                                      const DiagonalIdempotent& d) {
    const std::size_t n = d.slots.size();
    Mat m = m_zero(R, n, n);
    std::vector<GradeElement> shifts;
    shifts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = r_eps(R, d.slots[i].first);
        shifts.push_back(d.slots[i].second);
    }
    return make_idempotent(g, R, std::move(shifts), std::move(m));
}

} // namespace gkt
