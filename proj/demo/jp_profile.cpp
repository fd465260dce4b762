// Indicator profile of J_p = k^{S_{p-1}} # kC_p for a small odd prime,
// computed twice: by enumerating the simple modules and by the closed-form
// counts that only need the number of involutions in S_p.

#include <cstdlib>
#include <iostream>
#include <map>

#include "bismash.hpp"

int main(int argc, char** argv) {
  using namespace bismash;
  const int p = argc > 1 ? std::atoi(argv[1]) : 5;
  try {
    const auto fact = standard_factorization(Variant::J, p);
    const auto rep = indicator_report(fact);

    std::map<std::pair<std::int64_t, int>, int> tally;  // (dim, nu) -> count
    for (const auto& d : rep.descriptors) ++tally[{d.dimension, *d.indicator}];
    std::cout << "J_" << p << ": " << rep.descriptors.size() << " simple modules\n";
    for (const auto& [key, count] : tally)
      std::cout << "  dim " << key.first << ", nu = " << key.second << ": " << count << '\n';
    std::cout << "  Tr(alpha) = " << rep.trace_alpha << " = sum nu * dim = " << rep.sum_nu_dim << '\n';

    const auto c = jp_counts(p);
    std::cout << "closed form: m1 = " << c.m1 << ", m0 = " << c.m0 << ", ratio = " << ratio(p) << '\n';
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
