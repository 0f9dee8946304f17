#include "intamp/examples_corpus.hpp"

namespace intamp {
namespace {

QuadMatrix int_matrix(long n, long d, const std::vector<long>& v) {
    QuadMatrix M(n, d);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) M.at(i, j) = QuadElem::from_rat(Rat(v[i * n + j]), d);
    return M;
}

RatPoly x_minus_c_pow4(long c) {
    RatPoly p = RatPoly::linear_root(Rat(c));
    return p * p * p * p;
}

ExampleReport run_91() {
    ExampleReport rep{"9.1", {}};
    CMEndo e = example_endo("9.1");
    EndoAction act = ns_pullback(e);
    ClassificationReport c = classify(act);
    rep.assertions.push_back({"int_amplified", c.int_amplified});
    rep.assertions.push_back({"not diagonalizable", !c.diagonalizable});
    rep.assertions.push_back({"char poly is (x-4)^4", char_poly(act.mat) == x_minus_c_pow4(4)});
    rep.assertions.push_back({"min poly not squarefree", !is_squarefree(min_poly(act.mat))});
    return rep;
}

ExampleReport run_92() {
    ExampleReport rep{"9.2", {}};
    // f1 = [[2,1],[1,1]]^3; f = doubling o f1
    CMEndo f1{int_matrix(2, -1, {13, 8, 8, 5}), true};
    CMEndo f = example_endo("9.2");
    ClassificationReport c = classify(ns_pullback(f));
    rep.assertions.push_back(
        {"amplified_sufficient", c.amplified_sufficient == ClassificationReport::Sufficient::Yes});
    rep.assertions.push_back({"not int_amplified", !c.int_amplified});
    // the pinned power makes the N^1 spectral radius of f1 exceed 4
    CircleProfile pr = circle_profile(h11_charpoly(f1), Rat(16));
    rep.assertions.push_back({"f1 N^1 spectral radius > 4", pr.outside >= 1});
    return rep;
}

ExampleReport run_94() {
    ExampleReport rep{"9.4", {}};
    CMEndo f = example_endo("9.4-f");
    CMEndo g = example_endo("9.4-g");
    CMEndo h = example_endo("9.4-h");

    auto polarized36 = [](const CMEndo& e) {
        ClassificationReport c = classify(ns_pullback(e));
        return c.polarized_profile == ClassificationReport::Polarized::Yes && c.q_sq == 36;
    };
    rep.assertions.push_back({"f polarized profile Yes(36)", polarized36(f)});
    rep.assertions.push_back({"g polarized profile Yes(36)", polarized36(g)});

    QuadMatrix prod = f.M * g.M;
    bool same = true;
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) same = same && prod.at(i, j) == h.M.at(i, j);
    rep.assertions.push_back({"h = f o g as matrices", same});

    ClassificationReport ch = classify(ns_pullback(h));
    rep.assertions.push_back({"h not int_amplified", !ch.int_amplified});
    rep.assertions.push_back({"h has an N^1 eigenvalue of modulus < 1",
                              circle_profile(h11_charpoly(h), Rat(1)).inside >= 1});
    return rep;
}

}  // namespace

std::vector<std::string> example_ids() { return {"9.1", "9.2", "9.4"}; }

CMEndo example_endo(const std::string& id) {
    if (id == "9.1") return {int_matrix(2, -1, {2, 0, 2, 2}), true};
    if (id == "9.2") return {int_matrix(2, -1, {26, 16, 16, 10}), true};
    if (id == "9.4-f") return {int_matrix(2, -1, {1, -5, 1, 1}), true};
    if (id == "9.4-g") return {int_matrix(2, -1, {11, -105, 1, -9}), true};
    if (id == "9.4-h") return {int_matrix(2, -1, {6, -60, 12, -114}), true};
    throw InputError("unknown example id: " + id);
}

ExampleReport run_example(const std::string& id) {
    if (id == "9.1") return run_91();
    if (id == "9.2") return run_92();
    if (id == "9.4") return run_94();
    throw InputError("unknown example id: " + id);
}

}  // namespace intamp
