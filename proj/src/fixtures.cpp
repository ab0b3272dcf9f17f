#include "mdsconv/fixtures.hpp"

namespace mdsconv {

FieldSetup ExampleFixture::setup() const {
    FieldSetup s;
    s.modulus = kF8Modulus;
    if (extension) {
        s.ext_modulus = kF64Modulus;
        s.theta_ext = kAlpha;
    }
    return s;
}

FamilySpec ExampleFixture::spec() const { return make_spec(family, 8, n, k, delta, tau); }

PolyMatrix ExampleFixture::parity() const {
    return PolyMatrix(g0.size(), n, {Matrix::from_rows(g0), Matrix::from_rows(g1)});
}

std::string ExampleFixture::label() const {
    return "(" + std::to_string(conv.n) + "," + std::to_string(conv.k) + "," + std::to_string(conv.delta) + ")_8";
}

const std::vector<ExampleFixture>& example_fixtures() {
    static const std::vector<ExampleFixture> all{
    {1, Family::Sec3, 7, 2, 2, 0, false, {7, 4, 2}, 6,
     {true, true, true},
     {
         {1, 1, 1, 1, 1, 1, 1},
         {1, 2, 4, 3, 6, 7, 5},
         {1, 4, 6, 5, 2, 3, 7}},
     {
         {0, 0, 0, 0, 0, 0, 0},
         {1, 3, 5, 4, 7, 2, 6},
         {1, 6, 2, 7, 4, 5, 3}}},
    {2, Family::Sec3, 7, 1, 2, 0, false, {7, 3, 2}, 7,
     {true, true, true},
     {
         {1, 1, 1, 1, 1, 1, 1},
         {1, 2, 4, 3, 6, 7, 5},
         {1, 4, 6, 5, 2, 3, 7},
         {1, 3, 5, 4, 7, 2, 6}},
     {
         {0, 0, 0, 0, 0, 0, 0},
         {0, 0, 0, 0, 0, 0, 0},
         {1, 6, 2, 7, 4, 5, 3},
         {1, 7, 3, 2, 5, 6, 4}}},
    {3, Family::Sec3, 7, 1, 3, 0, false, {7, 4, 3}, 7,
     {true, false, false},
     {
         {1, 1, 1, 1, 1, 1, 1},
         {1, 2, 4, 3, 6, 7, 5},
         {1, 4, 6, 5, 2, 3, 7}},
     {
         {1, 3, 5, 4, 7, 2, 6},
         {1, 6, 2, 7, 4, 5, 3},
         {1, 7, 3, 2, 5, 6, 4}}},
    {4, Family::Sec4, 8, 2, 2, 0, false, {8, 4, 2}, 7,
     {true, true, true},
     {
         {1, 1, 1, 1, 1, 1, 1, 1},
         {0, 2, 4, 3, 6, 7, 5, 1},
         {0, 4, 6, 5, 2, 3, 7, 1},
         {0, 3, 5, 4, 7, 2, 6, 1}},
     {
         {0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 0, 0, 0, 0, 0, 0},
         {0, 7, 3, 2, 5, 6, 4, 1},
         {0, 6, 2, 7, 4, 5, 3, 1}}},
    {5, Family::Sec4, 8, 2, 3, 0, false, {8, 5, 3}, 7,
     {true, false, false},
     {
         {1, 1, 1, 1, 1, 1, 1, 1},
         {0, 2, 4, 3, 6, 7, 5, 1},
         {0, 4, 6, 5, 2, 3, 7, 1}},
     {
         {0, 7, 3, 2, 5, 6, 4, 1},
         {0, 6, 2, 7, 4, 5, 3, 1},
         {0, 3, 5, 4, 7, 2, 6, 1}}},
    {6, Family::Sec4, 8, 1, 2, 0, false, {8, 3, 2}, 8,
     {true, true, true},
     {
         {1, 1, 1, 1, 1, 1, 1, 1},
         {0, 2, 4, 3, 6, 7, 5, 1},
         {0, 4, 6, 5, 2, 3, 7, 1},
         {0, 3, 5, 4, 7, 2, 6, 1},
         {0, 6, 2, 7, 4, 5, 3, 1}},
     {
         {0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 0, 0, 0, 0, 0, 0},
         {0, 5, 7, 6, 3, 4, 2, 1},
         {0, 7, 3, 2, 5, 6, 4, 1}}},
    {7, Family::Sec4, 8, 1, 3, 0, false, {8, 4, 3}, 8,
     {true, false, true},
     {
         {1, 1, 1, 1, 1, 1, 1, 1},
         {0, 2, 4, 3, 6, 7, 5, 1},
         {0, 4, 6, 5, 2, 3, 7, 1},
         {0, 3, 5, 4, 7, 2, 6, 1}},
     {
         {0, 0, 0, 0, 0, 0, 0, 0},
         {0, 5, 7, 6, 3, 4, 2, 1},
         {0, 7, 3, 2, 5, 6, 4, 1},
         {0, 6, 2, 7, 4, 5, 3, 1}}},
    {8, Family::Sec5ConstructionOne, 9, 4, 1, 0, true, {9, 6, 2}, 6,
     {true, true, true},
     {
         {1, 1, 1, 1, 1, 1, 1, 1, 1},
         {1, 0, 1, 2, 5, 3, 3, 5, 2},
         {0, 1, 2, 5, 3, 3, 5, 2, 1}},
     {
         {0, 0, 0, 0, 0, 0, 0, 0, 0},
         {1, 1, 5, 3, 2, 0, 2, 3, 5},
         {0, 2, 3, 5, 1, 1, 5, 3, 2}}},
    {9, Family::Sec5ConstructionTwo, 9, 0, 0, 3, true, {9, 5, 3}, 8,
     {true, false, true},
     {
         {1, 0, 1, 2, 5, 3, 3, 5, 2},
         {0, 1, 2, 5, 3, 3, 5, 2, 1},
         {1, 2, 3, 1, 2, 3, 1, 2, 3},
         {0, 5, 5, 0, 5, 5, 0, 5, 5}},
     {
         {0, 0, 0, 0, 0, 0, 0, 0, 0},
         {1, 1, 1, 1, 1, 1, 1, 1, 1},
         {1, 1, 5, 3, 2, 0, 2, 3, 5},
         {0, 2, 3, 5, 1, 1, 5, 3, 2}}},
    {10, Family::Sec5Part2, 9, 1, 1, 0, true, {9, 3, 2}, 9,
     {true, true, true},
     {
         {1, 5, 0, 7, 7, 1, 7, 2, 4},
         {0, 5, 5, 2, 5, 4, 3, 1, 5},
         {1, 5, 1, 4, 2, 4, 6, 3, 6},
         {0, 4, 7, 0, 6, 1, 0, 5, 4},
         {1, 4, 4, 3, 0, 4, 1, 5, 3},
         {0, 6, 4, 2, 7, 2, 3, 3, 6}},
     {
         {0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 0, 0, 0, 0, 0, 0, 0},
         {1, 6, 7, 7, 2, 1, 7, 1, 0},
         {0, 3, 1, 2, 2, 6, 3, 2, 3}}},
    {11, Family::Sec5ConstructionOne, 9, 2, 1, 0, true, {9, 4, 2}, 8,
     {true, true, true},
     {
         {1, 1, 1, 1, 1, 1, 1, 1, 1},
         {1, 0, 1, 2, 5, 3, 3, 5, 2},
         {0, 1, 2, 5, 3, 3, 5, 2, 1},
         {1, 1, 5, 3, 2, 0, 2, 3, 5},
         {0, 2, 3, 5, 1, 1, 5, 3, 2}},
     {
         {0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 0, 0, 0, 0, 0, 0, 0},
         {0, 0, 0, 0, 0, 0, 0, 0, 0},
         {1, 2, 3, 1, 2, 3, 1, 2, 3},
         {0, 5, 5, 0, 5, 5, 0, 5, 5}}}
    };
    return all;
}

const ExampleFixture& example_fixture(int id) {
    for (const auto& f : example_fixtures())
        if (f.id == id) return f;
    fail(ErrorCode::InvalidParams, "no example with id " + std::to_string(id));
}

}  // namespace mdsconv
