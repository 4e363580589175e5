// Stress the catalog sampler: draw many certified samples of every label over
// Q and over several prime fields, and report any label whose retry budget is
// ever exhausted.  Used to tune the excluded-locus lists.

#include "qinv/huicatalog/huicatalog.hpp"

#include <cstdio>

using namespace qinv;

int main() {
  const std::uint64_t kSeeds = 40;
  int failures = 0;
  for (const CatalogEntry& e : hui_catalog()) {
    int bad_q = 0;
    for (std::uint64_t s = 1; s <= kSeeds; ++s) {
      try {
        (void)sample_q(e.name, s);
      } catch (const sampling_error&) {
        ++bad_q;
      }
    }
    int bad_p = 0;
    for (std::uint64_t p : {11ull, 101ull, 10007ull, 1000003ull}) {
      Fp::ScopedModulus guard(p);
      for (std::uint64_t s = 1; s <= kSeeds / 4; ++s) {
        try {
          (void)sample_fp(e.name, s);
        } catch (const sampling_error&) {
          ++bad_p;
        }
      }
    }
    if (bad_q || bad_p) {
      ++failures;
      std::printf("%-18s  Q failures %d/40   Fp failures %d/40\n", e.name.c_str(),
                  bad_q, bad_p);
    }
  }
  if (failures == 0) std::printf("all labels sampled cleanly\n");
  return failures == 0 ? 0 : 1;
}
