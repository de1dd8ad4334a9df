#include "hms/builtin_specs.hpp"

namespace hms {

LaurentPolySpec pants_spec(int n) {
    if (n <= 0) throw input_error("pants_spec: n must be positive");
    LaurentPolySpec spec;
    spec.n = n;
    for (int i = 0; i < n; ++i) {
        SpecTerm t;
        t.alpha.assign(n, 0);
        t.alpha[i] = 1;
        t.rho = 0;
        t.coeff = "1";
        spec.terms.push_back(std::move(t));
    }
    SpecTerm c;
    c.alpha.assign(n, 0);
    c.rho = 0;
    c.coeff = "1";
    spec.terms.push_back(std::move(c));
    return spec;
}

LaurentPolySpec local_pn_spec(int n) {
    if (n <= 0) throw input_error("local_pn_spec: n must be positive");
    LaurentPolySpec spec;
    spec.n = n;
    for (int i = 0; i < n; ++i) {
        SpecTerm t;
        t.alpha.assign(n, 0);
        t.alpha[i] = 1;
        t.rho = 0;
        t.coeff = "1";
        spec.terms.push_back(std::move(t));
    }
    SpecTerm prod;
    prod.alpha.assign(n, -1);
    prod.rho = 1;
    prod.coeff = "t";
    spec.terms.push_back(std::move(prod));
    SpecTerm c;
    c.alpha.assign(n, 0);
    c.rho = 0;
    c.coeff = "1";
    spec.terms.push_back(std::move(c));
    return spec;
}

LaurentPolySpec hirzebruch3_spec() {
    LaurentPolySpec spec;
    spec.n = 2;
    const int alphas[5][2] = {{0, 0}, {-1, 0}, {0, -1}, {0, 1}, {1, 3}};
    const int rhos[5] = {0, 0, 0, 1, 4};
    const char* coeffs[5] = {"1", "1", "1", "t", "t^4"};
    for (int i = 0; i < 5; ++i) {
        SpecTerm t;
        t.alpha = {Int(alphas[i][0]), Int(alphas[i][1])};
        t.rho = rhos[i];
        t.coeff = coeffs[i];
        spec.terms.push_back(std::move(t));
    }
    return spec;
}

}  // namespace hms
