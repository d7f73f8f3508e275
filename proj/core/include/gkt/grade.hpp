#ifndef GKT_GRADE_HPP
#define GKT_GRADE_HPP

#include "gkt/field.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gkt {

/// Finitely generated abelian grade group Z^rank x Z/m_1 x ... x Z/m_k.
struct GradeGroup {
    int rank = 1;
    std::vector<std::int64_t> torsion; // each entry >= 2

    static GradeGroup integers() { return GradeGroup{1, {}}; }
    static GradeGroup trivial() { return GradeGroup{0, {}}; }
    static GradeGroup free_abelian(int d) { return GradeGroup{d, {}}; }

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    void validate() const;

    bool operator==(const GradeGroup&) const = default;
};

/// Element of a GradeGroup: integer vector plus reduced residues.
struct GradeElement {
    std::vector<std::int64_t> free;
    std::vector<std::int64_t> residues;

    bool operator==(const GradeElement&) const = default;
};

GradeElement g_zero(const GradeGroup& g);
GradeElement g_int(const GradeGroup& g, std::int64_t n); // n * first free generator
bool g_is_zero(const GradeElement& e);
void g_check(const GradeGroup& g, const GradeElement& e);
GradeElement g_add(const GradeGroup& g, const GradeElement& a, const GradeElement& b);
GradeElement g_neg(const GradeGroup& g, const GradeElement& a);
GradeElement g_sub(const GradeGroup& g, const GradeElement& a, const GradeElement& b);

/// Lexicographic comparison: free part first, then residues.
int g_cmp(const GradeElement& a, const GradeElement& b);

/// One generator per free coordinate and per cyclic factor.
std::vector<GradeElement> group_generators(const GradeGroup& g);

/// "0", "[a]" (rank 1, no torsion) or "[a1,...,ad;r1,...,rk]".
std::string format_elem(const GradeGroup& g, const GradeElement& e);

/// "1", "Z", "Z^d", with " x Z/m" factors appended.
std::string format_group(const GradeGroup& g);

} // namespace gkt

#endif
