#include "gkt/grade.hpp"

namespace gkt {

void GradeGroup::validate() const {
    if (rank < 0) throw spec_error("grade group rank must be non-negative");
    for (auto m : torsion)
        if (m < 2) throw spec_error("torsion factor must be >= 2, got " + std::to_string(m));
}

GradeElement g_zero(const GradeGroup& g) {
    return GradeElement{std::vector<std::int64_t>(g.rank, 0),
                        std::vector<std::int64_t>(g.torsion.size(), 0)};
}

GradeElement g_int(const GradeGroup& g, std::int64_t n) {
    GradeElement e = g_zero(g);
    if (g.rank < 1) {
        if (n != 0) throw spec_error("nonzero integer shift in a group without free part");
        return e;
    }
    e.free[0] = n;
    return e;
}

bool g_is_zero(const GradeElement& e) {
    for (auto v : e.free)
        if (v != 0) return false;
    for (auto v : e.residues)
        if (v != 0) return false;
    return true;
}

void g_check(const GradeGroup& g, const GradeElement& e) {
    if ((int)e.free.size() != g.rank || e.residues.size() != g.torsion.size())
        throw spec_error("grade element shape does not match the group");
    for (size_t i = 0; i < e.residues.size(); ++i)
        if (e.residues[i] < 0 || e.residues[i] >= g.torsion[i])
            throw spec_error("residue out of range: " + std::to_string(e.residues[i]) +
                             " mod " + std::to_string(g.torsion[i]));
}

static std::int64_t mod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

GradeElement g_add(const GradeGroup& g, const GradeElement& a, const GradeElement& b) {
    g_check(g, a);
    g_check(g, b);
    GradeElement r = a;
    for (int i = 0; i < g.rank; ++i) r.free[i] += b.free[i];
    for (size_t i = 0; i < g.torsion.size(); ++i)
        r.residues[i] = mod(r.residues[i] + b.residues[i], g.torsion[i]);
    return r;
}

GradeElement g_neg(const GradeGroup& g, const GradeElement& a) {
    g_check(g, a);
    GradeElement r = a;
    for (int i = 0; i < g.rank; ++i) r.free[i] = -r.free[i];
    for (size_t i = 0; i < g.torsion.size(); ++i) r.residues[i] = mod(-r.residues[i], g.torsion[i]);
    return r;
}

GradeElement g_sub(const GradeGroup& g, const GradeElement& a, const GradeElement& b) {
    return g_add(g, a, g_neg(g, b));
}

int g_cmp(const GradeElement& a, const GradeElement& b) {
    if (a.free != b.free) return a.free < b.free ? -1 : 1;
    if (a.residues != b.residues) return a.residues < b.residues ? -1 : 1;
    return 0;
}

std::vector<GradeElement> group_generators(const GradeGroup& g) {
    std::vector<GradeElement> out;
    for (int i = 0; i < g.rank; ++i) {
        GradeElement e = g_zero(g);
        e.free[i] = 1;
        out.push_back(e);
    }
    for (size_t i = 0; i < g.torsion.size(); ++i) {
        GradeElement e = g_zero(g);
        e.residues[i] = 1;
        out.push_back(e);
    }
    return out;
}

std::string format_elem(const GradeGroup& g, const GradeElement& e) {
    g_check(g, e);
    if (g_is_zero(e)) return "0";
    std::string s = "[";
    for (int i = 0; i < g.rank; ++i) {
        if (i) s += ",";
        s += std::to_string(e.free[i]);
    }
    if (!g.torsion.empty()) {
        s += ";";
        for (size_t i = 0; i < e.residues.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e.residues[i]);
        }
    }
    s += "]";
    return s;
}

std::string format_group(const GradeGroup& g) {
    if (g.is_trivial()) return "1";
    std::string s;
    if (g.rank == 1) s = "Z";
    else if (g.rank > 1) s = "Z^" + std::to_string(g.rank);
    for (auto m : g.torsion) {
        if (!s.empty()) s += " x ";
        s += "Z/" + std::to_string(m);
    }
    return s;
}

} // namespace gkt
