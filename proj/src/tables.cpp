#include "hsect/report/tables.hpp"

namespace hsect {

namespace {

std::vector<ExpectedDegree> build_table() {
    std::vector<ExpectedDegree> t;

    // degree 2: the double line over a tritangent; invariants computed, not published
    t.push_back({2, {{1, "3K(2)", 2, 2, 2}}, 72, -1, {}});

    t.push_back({4, {{1, "K(4)", 4, 3, 24}}, 72, -1, {}});

    t.push_back({6,
                 {{1, "AA[2](1;2;3) (1x2)(1x3)(2x3)", 6, 3, 12}, {2, "K(3,3)", 6, 4, 72}},
                 76,
                 9235,
                 {}});

    t.push_back({8,
                 {{1, "AA[2](1;2;3) A[1](1,2,3) A[1](1,2,3)", 8, 3, 12},
                  {2, "AA[3](1;2;3;4) (1x2)(1x3)(2x4)(3x4)", 8, 4, 16},
                  {3, "AA[3](1;2;3;4) (1x2)(1x4)(2x3)(3x4)", 8, 4, 48}},
                 80,
                 860,
                 {}});

    t.push_back({10,
                 {{1, "AA[2](1;2;3) AA[2](1;2;3) A[1](1,2,3)", 9, 3, 12},
                  {2, "AA[3](1;2;3;4) A[2](1,2;3,4) (1x3)(2x4)", 10, 4, 4},
                  {3, "AA[3](1;2;3;4) A[1](1,2,4) A[1](2,3,4) (1x3)", 10, 4, 8},
                  {4, "AA[3](1;2;3;4) A[2](1,3;2,4) (1x2)(3x4)", 10, 4, 20},
                  {5, "AA[3](1;2;3;4) A[2](1,4;2,3) (1x2)(3x4)", 10, 4, 20},
                  {6, "AA[4](1;2;3;4;5) (1x3)(1x4)(2x4)(2x5)(3x5)", 10, 5, 120}},
                 16,
                 171,
                 {}});

    {
        ExpectedDegree d12{12,
                           {{1, "AA[2](1;2;3) AA[2](1;2;3) AA[2](1;2;3)", 10, 3, 36},
                            {2, "AA[3](1;2;3;4) AA[3](1;2;3;4) (1x2)(3x4)", 10, 4, 24},
                            {3, "AA[3](1;2;3;4) AA[3](1;2;4;3) (1x2)(3x4)", 10, 4, 24},
                            {4, "AA[3](1;2;3;4) AA[3](1;2;3;4) (1x3)(2x4)", 11, 4, 16},
                            {5, "AA[3](1;2;3;4) A[2](1,2;3,4) A[2](1,3;2,4)", 12, 4, 4},
                            {6, "AA[3](1;2;3;4) A[2](1,2;3,4) A[2](1,4;2,3)", 12, 4, 8},
                            {7, "AA[3](1;2;3;4) A[2](1,3;2,4) A[2](1,3;2,4)", 12, 4, 48},
                            {8, "AA[4](1;2;3;4;5) A[1](1,4,5) A[1](2,3,5) (1x3)(2x4)", 12, 5, 16},
                            {9, "AA[4](1;2;3;4;5) A[1](1,2,5) A[1](3,4,5) (1x3)(2x4)", 12, 5, 18}},
                           90,
                           44,
                           {}};
        auto C = [](std::initializer_list<std::pair<int, long>> items) {
            std::vector<long> v(9, 0);
            for (auto [i, c] : items) v[i - 1] = c;
            return v;
        };
        d12.censuses = {{C({{1, 20}}), 1}, {C({{1, 4}}), 1},          {C({{1, 1}}), 1},
                        {C({{2, 1}}), 1},  {C({{3, 1}}), 1},          {C({{4, 3}}), 1},
                        {C({{4, 1}}), 1},  {C({{5, 16}}), 1},         {C({{5, 4}}), 2},
                        {C({{5, 3}}), 1},  {C({{5, 2}}), 6},          {C({{5, 1}, {6, 1}}), 1},
                        {C({{5, 1}}), 1},  {C({{6, 6}}), 1},          {C({{6, 1}}), 1},
                        {C({{7, 16}}), 1}, {C({{7, 2}}), 2},          {C({{7, 1}}), 1},
                        {C({{8, 90}}), 1}, {C({{8, 10}}), 1},         {C({{8, 6}}), 1},
                        {C({{8, 4}}), 3},  {C({{8, 3}}), 3},          {C({{8, 2}}), 5},
                        {C({{8, 1}}), 1},  {C({{9, 3}}), 1},          {C({{9, 2}}), 2},
                        {C({{9, 1}}), 1}};
        t.push_back(std::move(d12));
    }

    {
        ExpectedDegree d14{14,
                           {{1, "AA[3](1;2;3;4) AA[3](1;2;4;3) A[2](1,3;2,4)", 13, 4, 4},
                            {2, "AA[3](1;2;3;4) AA[3](1;2;3;4) A[2](1,3;2,4)", 13, 4, 16},
                            {3, "AA[4](1;2;3;4;5) A[3](3,5;2;1,4) A[1](2,4,5) (1x3)", 14, 5, 4},
                            {4, "AA[4](1;2;3;4;5) A[2](1,4;2,5) A[2](2,4;3,5) (1x3)", 14, 5, 8},
                            {5, "AA[4](1;2;3;4;5) A[3](3,4;2;1,5) A[1](2,4,5) (1x3)", 14, 5, 8},
                            {6, "AA[4](1;2;3;4;5) A[2](1,4;2,3) A[1](1,3,5) A[1](2,4,5)", 14, 5, 12},
                            {7, "AA[4](1;2;3;4;5) A[2](1,2;3,4) A[1](1,3,5) A[1](2,4,5)", 14, 5, 14},
                            {8, "AA[5](1;2;3;4;5;6) A[1](1,3,5) A[1](2,4,6) (1x4)(2x5)(3x6)", 14, 6, 336}},
                           12,
                           21,
                           {}};
        auto C = [](std::initializer_list<std::pair<int, long>> items) {
            std::vector<long> v(8, 0);
            for (auto [i, c] : items) v[i - 1] = c;
            return v;
        };
        d14.censuses = {{C({{1, 2}, {2, 1}}), 1}, {C({{1, 1}}), 1},         {C({{2, 3}}), 1},
                        {C({{2, 1}}), 1},         {C({{3, 8}, {5, 4}}), 1}, {C({{3, 3}}), 1},
                        {C({{3, 2}, {5, 2}}), 1}, {C({{3, 2}}), 2},         {C({{3, 1}}), 1},
                        {C({{4, 3}}), 1},         {C({{4, 2}}), 1},         {C({{4, 1}}), 1},
                        {C({{5, 2}}), 1},         {C({{5, 1}}), 1},         {C({{6, 4}}), 1},
                        {C({{6, 2}}), 1},         {C({{6, 1}}), 1},         {C({{7, 1}}), 1},
                        {C({{8, 2}}), 1},         {C({{8, 1}}), 1}};
        t.push_back(std::move(d14));
    }

    {
        ExpectedDegree d16{16,
                           {{1, "AA[3](1;2;3;4) AA[3](1;2;3;4) AA[3](1;2;4;3)", 14, 4, 8},
                            {2, "AA[3](1;2;3;4) AA[3](1;2;4;3) AA[3](1;3;2;4)", 14, 4, 24},
                            {3, "AA[3](1;2;3;4) AA[3](1;2;3;4) AA[3](1;2;3;4)", 14, 4, 48},
                            {4, "AA[4](1;2;3;4;5) AA[4](1;2;3;5;4) A[1](2,4,5) (1x3)", 14, 5, 12},
                            {5, "AA[4](1;2;3;4;5) AA[4](1;2;3;4;5) A[1](2,4,5) (1x3)", 14, 5, 12},
                            {6, "AA[4](1;2;3;4;5) A[3](1,2;4;3,5) A[3](1,3;4;2,5)", 16, 5, 4},
                            {7, "AA[4](1;2;3;4;5) A[3](1,4;2;3,5) A[3](1,3;5;2,4)", 16, 5, 6},
                            {8, "AA[5](1;2;3;4;5;6) A[2](1,3;2,6) A[2](3,5;4,6) (1x4)(2x5)", 16, 6, 96}},
                           24,
                           12,
                           {}};
        auto C = [](std::initializer_list<std::pair<int, long>> items) {
            std::vector<long> v(8, 0);
            for (auto [i, c] : items) v[i - 1] = c;
            return v;
        };
        d16.censuses = {{C({{1, 4}}), 1}, {C({{1, 1}}), 1}, {C({{2, 1}}), 1},  {C({{3, 4}}), 1},
                        {C({{3, 1}}), 1}, {C({{4, 1}}), 1}, {C({{5, 1}}), 1},  {C({{6, 1}}), 1},
                        {C({{7, 1}}), 1}, {C({{8, 24}}), 1}, {C({{8, 2}}), 1}, {C({{8, 1}}), 1}};
        t.push_back(std::move(d16));
    }

    {
        ExpectedDegree d18{18,
                           {{1, "AA[4](1;2;3;4;5) AA[4](1;4;2;5;3) A[3](1,2;4;3,5)", 16, 5, 8},
                            {2, "AA[4](1;2;3;4;5) AA[4](1;2;5;3;4) A[3](2,3;5;1,4)", 16, 5, 8},
                            {3, "AA[4](1;2;3;4;5) AA[4](1;2;5;3;4) A[3](1,3;5;2,4)", 17, 5, 4},
                            {4, "AA[5](1;2;3;4;5;6) AA[5](1;2;6;4;5;3) (1x4)(2x5)(3x6)", 17, 6, 8},
                            {5, "AA[5](1;2;3;4;5;6) AA[5](1;2;3;4;5;6) (1x4)(2x5)(3x6)", 17, 6, 24}},
                           3,
                           6,
                           {}};
        auto C = [](std::initializer_list<std::pair<int, long>> items) {
            std::vector<long> v(5, 0);
            for (auto [i, c] : items) v[i - 1] = c;
            return v;
        };
        d18.censuses = {{C({{1, 1}}), 1}, {C({{2, 1}}), 1}, {C({{3, 1}}), 1},
                        {C({{4, 1}}), 1}, {C({{5, 3}}), 1}, {C({{5, 1}}), 1}};
        t.push_back(std::move(d18));
    }

    {
        ExpectedDegree d20{20,
                           {{1, "AA[5](1;2;3;4;5;6) AA[5](1;2;3;4;5;6) A[1](1,3,5) A[1](2,4,6)", 16, 6, 240},
                            {2, "AA[5](1;2;3;4;5;6) AA[5](1;3;2;4;6;5) A[2](2,5;3,6) (1x4)", 17, 6, 48},
                            {3, "AA[4](1;2;3;4;5) AA[4](1;2;3;4;5) AA[4](1;4;2;5;3)", 18, 5, 20}},
                           4,
                           3,
                           {}};
        auto C = [](std::initializer_list<std::pair<int, long>> items) {
            std::vector<long> v(3, 0);
            for (auto [i, c] : items) v[i - 1] = c;
            return v;
        };
        d20.censuses = {{C({{1, 1}}), 1}, {C({{2, 1}}), 1}, {C({{3, 4}}), 1}};
        t.push_back(std::move(d20));
    }

    t.push_back({22,
                 {{1, "AA[5](1;2;3;4;5;6) AA[5](1;4;5;2;6;3) A[4](3,5;1;2;4,6)", 19, 6, 8}},
                 1,
                 1,
                 {{{1}, 1}}});

    t.push_back({24,
                 {{1, "AA[5](1;2;3;4;5;6) AA[5](1;2;5;6;3;4) AA[5](1;4;5;2;3;6)", 18, 6, 144}},
                 1,
                 1,
                 {{{1}, 1}}});

    t.push_back({26, {}, 0, 0, {}});

    t.push_back({28,
                 {{1, "DD[5](1,2;3,4;5,6;7,8) DD[5](1,5;3,7;2,8;4,6) AA[7](1;7;6;2;3;5;8;4)", 20, 7, 336}},
                 1,
                 1,
                 {{{1}, 1}}});

    t.push_back({30, {}, 0, 0, {}});
    t.push_back({32, {}, 0, 0, {}});
    return t;
}

}  // namespace

const std::vector<ExpectedDegree>& expected_table() {
    static const std::vector<ExpectedDegree> t = build_table();
    return t;
}

const ExpectedDegree* expected_for(long degree) {
    for (const ExpectedDegree& d : expected_table())
        if (d.degree == degree) return &d;
    return nullptr;
}

const std::vector<long>& expected_bouquet_sizes_deg8() {
    static const std::vector<long> v = {1, 2, 2, 2, 3, 3, 4, 4, 4, 5, 5, 7, 8, 20};
    return v;
}

}  // namespace hsect
