// throwaway profiling probe for the rational chart Smith form
#include <chrono>
#include <iostream>

#include "pencil5/fibration.hpp"

using namespace pencil5;
using Clock = std::chrono::steady_clock;

static long ms_since(Clock::time_point t) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t).count();
}

int main() {
    const RationalField Q;
    auto S = build_example1(Q, 7);

    auto t = Clock::now();
    auto probe = analyze_fibre(S, Q.one(), Q.from_long(12345));
    std::cout << "analyze_fibre(generic): " << ms_since(t) << " ms, " << to_string(probe.classification)
              << "\n";

    const auto quadric_idx = S.quadric_indices();
    const GradingPtr fibre_ring = S.ring->fibre_ring();
    const auto cubic_monos = monomials_of_bidegree(*fibre_ring, BiDegree(0, 3));
    std::map<Monomial, int, GrevlexLess> ccol;
    for (std::size_t i = 0; i < cubic_monos.size(); ++i) ccol.emplace(cubic_monos[i], static_cast<int>(i));

    t = Clock::now();
    PolyMat<RationalField> mu(Q, 15, static_cast<int>(cubic_monos.size()));
    std::vector<std::map<Monomial, UniPoly<RationalField>, GrevlexLess>> chart_quads;
    for (int qi : quadric_idx)
        chart_quads.push_back(S.generators[(std::size_t)qi].specialize_chart().collect_by_fibre_monomial());
    for (int qi = 0; qi < 3; ++qi)
        for (int xv = 0; xv < 5; ++xv) {
            const Monomial xm = Monomial::variable(fibre_ring->var_count(), xv);
            for (const auto& [mono, up] : chart_quads[(std::size_t)qi])
                mu.at(5 * qi + xv, ccol.at(mono * xm)) = mu.at(5 * qi + xv, ccol.at(mono * xm)) + up;
        }
    std::cout << "matrix build: " << ms_since(t) << " ms\n";

    t = Clock::now();
    auto sf = smith_form(mu);
    std::cout << "smith 15x35: " << ms_since(t) << " ms, rank " << sf.rank << " torsion " << sf.torsion_length
              << "\n";
    int idx = 0;
    for (const auto& f : sf.invariant_factors) {
        ++idx;
        if (f.degree() > 0) std::cout << "  d" << idx << " = " << f.to_string() << "\n";
    }
    return 0;
}
