// Compares the serial reference genus search against the OpenMP kernel.
#include <chrono>
#include <cstdio>

#include "mgraph/catalog.hpp"
#include "mgraph/rotation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mgraph;

namespace {

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void bench(const char* name, const MultiGraph& g) {
    int gs = -1, gp = -1;
    double ts = timed([&] { gs = minimum_genus_serial(g); });
    double tp = timed([&] { gp = minimum_genus(g); });
    std::printf("%-24s systems=%-10lld serial=%8.3fs parallel=%8.3fs speedup=%5.2fx genus=%d%s\n",
                name, static_cast<long long>(rotation_system_count(g)), ts, tp,
                tp > 0 ? ts / tp : 0.0, gp, gs == gp ? "" : "  MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    bool big = argc > 1 && std::string(argv[1]) == "--k44";
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#endif
    bench("K5", catalog("complete", {5}).graph);
    bench("K_{3,3}", catalog("complete_bipartite", {3, 3}).graph);
    bench("K_{3,4}", catalog("complete_bipartite", {3, 4}).graph);
    bench("grid(3,3)", catalog("grid", {3, 3}).graph);
    bench("genus2 example", catalog("paper-genus2-example", {}).graph);
    if (big) bench("K_{4,4}", catalog("complete_bipartite", {4, 4}).graph);
    return 0;
}
