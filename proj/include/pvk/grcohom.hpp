// Integral cohomology rings as quotients of exterior algebras, the wedge of
// tori and genus-2 surfaces mapping to BG_3, and the induced maps.

#ifndef PVK_GRCOHOM_HPP
#define PVK_GRCOHOM_HPP

#include "pvk/intlinalg.hpp"
#include "pvk/word.hpp"

#include <string>
#include <vector>

namespace pvk {

using IntVector = std::vector<Integer>;

// ---------------------------------------------------------------------------
// Exterior algebra bookkeeping. Degree-d monomials are the sorted d-subsets of
// the generators in lexicographic order.

std::vector<std::vector<std::size_t>> exterior_monomials(std::size_t m, std::size_t d);
std::size_t binomial(std::size_t n, std::size_t k);
/// Index of e_p ^ e_q (p < q) among the degree-2 monomials.
std::size_t pair_index(std::size_t m, std::size_t p, std::size_t q);
/// coef * e_p ^ e_q as a degree-2 vector (p > q gets a sign, p == q gives 0).
IntVector wedge_term(std::size_t m, std::size_t p, std::size_t q, long coef = 1);
/// u ^ v for degree-1 vectors u, v.
IntVector wedge(const IntVector& u, const IntVector& v);
/// Second exterior power of a linear map acting on row vectors: rows of
/// `map` are the images of basis vectors.
IntMatrix wedge2_map(const IntMatrix& map);

struct GradedPiece {
    std::size_t degree = 0;
    std::size_t rank = 0;
    std::vector<Integer> torsion;
    std::size_t relation_rank = 0;
    bool operator==(const GradedPiece&) const = default;
};

/// Exterior algebra over Z on named generators modulo the ideal generated by
/// degree-2 relations.
class ExteriorQuotient {
public:
    ExteriorQuotient(std::vector<std::string> names, std::vector<IntVector> relations);

    std::size_t generator_count() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<IntVector>& relations() const { return relations_; }

    /// Rows spanning the degree-d part of the ideal.
    IntMatrix ideal_component(std::size_t d) const;
    GradedPiece piece(std::size_t d) const;
    std::vector<GradedPiece> pieces(std::size_t max_degree) const;
    std::vector<std::size_t> ranks(std::size_t max_degree) const;
    /// Degree-2 element lies in the relation span.
    bool in_relation_span(const IntVector& element) const;
    std::string to_string(const IntVector& element, std::size_t degree) const;

private:
    std::vector<std::string> names_;
    std::vector<IntVector> relations_;
};

// ---------------------------------------------------------------------------
// The wedge model X = X_1 v ... v X_6

struct WedgePiece {
    enum Kind { Torus, Genus2 } kind = Torus;
    std::vector<Word> labels; // images of the standard generators
    std::string name;
};

struct SurfaceWedgeModel {
    AlphabetPtr torus_alphabet;             // a1, b1, a2, b2, c1
    std::vector<WedgePiece> pieces;
    std::vector<std::string> h1_names;      // x1..x4, y11, z11, y12, z12, ..., z42
    std::vector<std::string> h2_names;      // top class of each piece
    std::vector<std::size_t> piece_of;      // per degree-1 class

    std::size_t h1_rank() const { return h1_names.size(); }
    std::size_t h2_rank() const { return h2_names.size(); }
    std::size_t h1_index(const std::string& name) const;
    std::size_t h2_index(const std::string& name) const;
    /// Cup product of two degree-1 basis classes, in H^2 coordinates.
    IntVector cup(std::size_t p, std::size_t q) const;
    IntVector cup(const IntVector& u, const IntVector& v) const;
};

SurfaceWedgeModel build_wedge_model();
/// Order of the degree-1 basis of H^*(T^5).
std::vector<std::string> torus5_names();

/// theta_* on H_1 computed from the piece labels: 20 x 5, row = image of a class.
IntMatrix theta_lower(const SurfaceWedgeModel& model);
/// theta^* on H^1: 5 x 20, row = image of a dual class.
IntMatrix theta_upper(const SurfaceWedgeModel& model);
/// The same two maps as tabulated by hand, for comparison.
IntMatrix theta_lower_table();
IntMatrix theta_upper_table();

/// theta^*(u) theta^*(v) expanded with the model's cup rules (u, v index the T^5 basis).
IntVector pullback_cup(const SurfaceWedgeModel& model, std::size_t u, std::size_t v);
/// Same value through Lambda^2(theta^*) (2x2 minors) followed by the cup map.
IntVector pullback_cup_minors(const SurfaceWedgeModel& model, std::size_t u, std::size_t v);
/// theta^* on H^2(T^5): 10 x 6, rows indexed by pairs in lex order.
IntMatrix theta_degree2(const SurfaceWedgeModel& model);

/// Degree-1 classes appearing in theta^*(u) theta^*(v) whose products survive,
/// as (p, q, coefficient) with p before q in the expansion.
struct CupTerm {
    std::size_t p, q;
    Integer coef;
};
std::vector<CupTerm> pullback_cup_terms(const SurfaceWedgeModel& model, std::size_t u, std::size_t v);

/// Hand-tabulated cup products theta^*(u) theta^*(v), as (u, v, top class).
struct CupTableEntry {
    std::string u, v, image;
};
std::vector<CupTableEntry> cup_product_table();

/// Kernel of theta^* on H^2(T^5) (rows in Lambda^2 of a1, b1, a2, b2, c1).
IntMatrix g3_theta_kernel();
/// The four hand-derived relations of H^*(G_3).
std::vector<IntVector> g3_relations();
ExteriorQuotient g3_ring();

// ---------------------------------------------------------------------------
// H^*(PV_3)

/// Degree-1 basis l12, l21, l13, l31, l23, l32.
std::vector<std::string> pv3_cohomology_names();
/// a1, b1, a2, b2, c1, c2.
std::vector<std::string> g3z_cohomology_names();

/// delta_* on H_1 from abelianizing the generator change: rows a1..c2, columns l12..l32.
IntMatrix delta_lower();
IntMatrix delta_lower_table();
/// delta^* as tabulated: rows l12..l32, columns a1..c2.
IntMatrix delta_upper_table();
/// (delta^*)^-1 as tabulated: rows a1..c2, columns l12..l32.
IntMatrix delta_upper_inverse_table();

struct DeltaCheck {
    bool lower_matches_table = false;
    bool upper_is_transpose = false;
    bool product_is_identity = false;
    bool ok() const { return lower_matches_table && upper_is_transpose && product_is_identity; }
};
DeltaCheck delta_matrices_check();

/// Relations 1)-3) of the presentation of H^*(PV_3), in that order (3 + 6 + 1).
std::vector<IntVector> pv3_relations();
std::vector<IntVector> pv3_condition2_relations();
ExteriorQuotient pv3_ring();
/// Relations of H^*(G_3 * Z) (the four of G_3 and c2 times each other class),
/// moved to the l_ij basis along (delta^*)^-1.
std::vector<IntVector> pv3_transported_relations();
ExteriorQuotient pv3_ring_transported();

std::size_t relation_span_rank(const std::vector<IntVector>& relations);
/// Row lattices of the two relation lists coincide.
bool same_span(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

/// C(n-1, r) * n! / (n-r)!, and 0 for r > n-1.
Integer beer_rank(long n, long r);

} // namespace pvk

#endif
