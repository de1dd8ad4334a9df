// Timing comparison of the parallel lower-hull kernel against the serial
// reference on a synthetic grid with pseudorandom heights.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "hms/geometry.hpp"

using namespace hms;

namespace {

std::vector<LiftedPoint> grid_instance(int side, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-40, 40);
    std::vector<LiftedPoint> points;
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y) {
            LiftedPoint p;
            p.base = {Int(x), Int(y)};
            p.height = Rat(num(rng), 7);
            points.push_back(std::move(p));
        }
    return points;
}

template <typename F>
double time_ms(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int side = argc > 1 ? std::atoi(argv[1]) : 7;
    const int rounds = argc > 2 ? std::atoi(argv[2]) : 3;
    if (side < 2 || rounds < 1) {
        std::cerr << "usage: bench_hull [grid-side >= 2] [rounds >= 1]\n";
        return 2;
    }

    const auto points = grid_instance(side, 20240816u);
    std::cout << "lower hull of a " << side << "x" << side << " grid, " << rounds
              << " rounds\n";

    std::vector<HullCell> serial_cells, parallel_cells;
    double serial_total = 0, parallel_total = 0;
    for (int r = 0; r < rounds; ++r) {
        serial_total += time_ms([&] { serial_cells = lower_hull_serial(points); });
        parallel_total += time_ms([&] { parallel_cells = lower_hull(points); });
    }

    bool same = serial_cells.size() == parallel_cells.size();
    for (std::size_t i = 0; same && i < serial_cells.size(); ++i)
        same = serial_cells[i].members == parallel_cells[i].members;

    std::cout << "cells: " << serial_cells.size() << "\n";
    std::cout << "serial:   " << serial_total / rounds << " ms/round\n";
    std::cout << "parallel: " << parallel_total / rounds << " ms/round\n";
    std::cout << "outputs identical: " << (same ? "yes" : "no") << "\n";
    return same ? 0 : 1;
}
