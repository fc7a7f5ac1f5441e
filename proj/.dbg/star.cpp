#include "fixtures.hpp"
#include "rgr/fes.hpp"
#include <chrono>
#include <cstdlib>
#include <iostream>
using namespace rgr;
using Clock = std::chrono::steady_clock;
int main(int argc, char** argv) {
    int chain = std::atoi(argv[1]), cross = std::atoi(argv[2]);
    Digraph d(4 + chain);
    for (int i = 0; i < 4; ++i) fx::add_solid(d, i, (i + 1) % 4);
    for (int i = 0; i < chain; ++i) fx::add_solid(d, 0, 4 + i);
    for (int i = 0; i < chain; ++i)
        for (int j = i + 1; j < chain; ++j) d.add_arc(4 + i, 4 + j);
    for (int u : {1, 3}) {
        for (int i = 0; i < cross; ++i) d.add_arc(4 + i, u);
        for (int j = cross; j < chain; ++j) d.add_arc(u, 4 + j);
    }
    auto v = Variant::make(Direction::Undirected, LabelClass::Any, Semantics::Strict);
    auto t0 = Clock::now();
    auto sh = shrink_pendant_trees(d, v);
    auto t1 = Clock::now();
    std::cout << "chain=" << chain << " shrink_ms=" << std::chrono::duration<double,std::milli>(t1-t0).count()
              << " no=" << sh.certified_no << " n=" << sh.shrunk.n()
              << " removals=" << sh.removals.size() << "\n";
    if (argc > 3) {
        auto t2 = Clock::now();
        auto r = fes_solve(d, v);
        auto t3 = Clock::now();
        std::cout << "fes_ms=" << std::chrono::duration<double,std::milli>(t3-t2).count()
                  << " verdict=" << (r.yes()?"yes":r.no()?"no":"unk") << " note=" << r.note << "\n";
        if (r.yes()) std::cout << "cert=" << check_realization(d, TemporalGraph(d.n(), *r.witness), v).ok << "\n";
    }
    return 0;
}
