#include <doctest.h>

#include "lwc/channel.hpp"
#include "lwc/kernels.hpp"

using namespace lwc;

namespace {

// Walks all 2^n vectors and keeps the members of span(basis) by solving
// membership naively; independent of the Gray-code scan under test.
WeightScan naive_scan(const std::vector<BitVector>& basis, int n) {
    WeightScan out;
    out.min_weight = n + 1;
    out.covering.assign(n, -1);
    uint64_t total = uint64_t{1} << basis.size();
    for (uint64_t mask = 1; mask < total; ++mask) {
        BitVector w(n);
        for (size_t j = 0; j < basis.size(); ++j)
            if ((mask >> j) & 1) w ^= basis[j];
        if (w.is_zero()) continue;
        int wt = w.weight();
        out.min_weight = std::min(out.min_weight, wt);
        for (int i : w.support())
            if (out.covering[i] < 0 || wt < out.covering[i]) out.covering[i] = wt;
    }
    return out;
}

std::vector<BitVector> random_basis(SplitMix64& rng, int n, int dim) {
    // Unit part guarantees independence; random tails mix the rest.
    std::vector<BitVector> basis;
    for (int j = 0; j < dim; ++j) {
        BitVector v(n);
        v.set(j, true);
        for (int i = dim; i < n; ++i) v.set(i, rng.next_bit());
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

TEST_CASE("scan_span agrees with naive enumeration") {
    SplitMix64 rng(21);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 4 + static_cast<int>(rng.next_below(20));
        int dim = 1 + static_cast<int>(rng.next_below(std::min(n, 10)));
        auto basis = random_basis(rng, n, dim);
        auto expect = naive_scan(basis, n);
        auto got = scan_span(basis, n, true, Exec::Serial);
        CHECK(got.min_weight == expect.min_weight);
        CHECK(got.covering == expect.covering);
    }
}

TEST_CASE("parallel scan matches the serial reference") {
    SplitMix64 rng(22);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 16 + static_cast<int>(rng.next_below(48));
        int dim = 13 + static_cast<int>(rng.next_below(4));  // crosses the omp threshold
        auto basis = random_basis(rng, n, dim);
        auto serial = scan_span(basis, n, true, Exec::Serial);
        auto parallel = scan_span(basis, n, true, Exec::Parallel);
        CHECK(serial.min_weight == parallel.min_weight);
        CHECK(serial.covering == parallel.covering);
    }
}

TEST_CASE("scan of the trivial span") {
    auto got = scan_span({}, 5, true, Exec::Serial);
    CHECK(got.min_weight == 6);  // sentinel: no nonzero word
    CHECK(got.covering == std::vector<int>(5, -1));
}

TEST_CASE("enum cap raises a capacity error naming the cap") {
    CHECK_THROWS_WITH_AS(check_enum_cap("min_distance", 25, 24),
                         doctest::Contains("cap is 2^24"), CapacityError);
    CHECK_NOTHROW(check_enum_cap("min_distance", 24, 24));
}
