// Compares the chain-pruned parallel degree kernel against the dense serial
// reference on the same inputs; prints timings and checks agreement.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "matvar/degree.hpp"
#include "matvar/invariants.hpp"

using namespace matvar;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

int main() {
    bool all_equal = true;
    std::cout << std::left << std::setw(22) << "input" << std::setw(14) << "parallel[s]"
              << std::setw(14) << "serial[s]" << "value\n";

    for (int nv : {3, 4}) {
        ArrangementPoset p = build_arrangement(complete_graph(nv));
        for (int n = p.rank() + 1; n <= p.rank() + 3; ++n) {
            BlowupTower tower = make_tower(p, n);
            DivisorClass d = eval_at(change_basis(p, build_Sbar(p), Basis::E), 2);

            auto t0 = clock_type::now();
            mpz_class fast = self_intersection(tower, d);
            double fast_s = seconds_since(t0);

            t0 = clock_type::now();
            mpz_class slow = self_intersection_reference(tower, d);
            double slow_s = seconds_since(t0);

            if (fast != slow) all_equal = false;
            std::cout << std::setw(22)
                      << ("K" + std::to_string(nv) + " Sbar(2)^" + std::to_string(n))
                      << std::setw(14) << fast_s << std::setw(14) << slow_s << fast.get_str()
                      << (fast == slow ? "" : "  MISMATCH") << "\n";
        }
    }

    std::cout << (all_equal ? "kernels agree" : "kernels disagree") << std::endl;
    return all_equal ? 0 : 1;
}
