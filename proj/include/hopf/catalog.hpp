#pragma once

#include "hopf/coquasi.hpp"

namespace hopf {

// Executable fixtures for the worked examples: loadable by name, each
// carrying its algebras, forms, optional product, and expected-value tables
// used as the regression baseline.
struct Fixture {
    struct ExpectedEntry {
        BasisId left, right;
        std::string literal;   // canonical scalar literal
        std::string note;
    };

    std::string name;
    std::map<std::string, HopfPtr> algebras;
    std::map<std::string, BilinearForm> forms;
    std::map<std::string, ProductPtr> products;
    std::map<std::string, std::vector<ExpectedEntry>> expected;  // form name -> entries

    const ProductPtr& product(const std::string& key = "double") const {
        auto it = products.find(key);
        if (it == products.end()) fail(Error::Kind::Domain, name + " has no product " + key);
        return it->second;
    }
    const BilinearForm& form(const std::string& key) const {
        auto it = forms.find(key);
        if (it == forms.end()) fail(Error::Kind::Domain, name + " has no form " + key);
        return it->second;
    }
    const HopfPtr& algebra(const std::string& key) const {
        auto it = algebras.find(key);
        if (it == algebras.end()) fail(Error::Kind::Domain, name + " has no algebra " + key);
        return it->second;
    }
};

// Names: kZ, kX, kZ-bowtie-kX, H4, H4-double, Utilde(n), Borel(n),
// Borel-double(n), Z2-toys (n in {1,2,3}).
Fixture load_fixture(const std::string& name);
std::vector<std::string> fixture_names();

// Re-validates the fixture's payloads and compares every attached expected
// table entrywise.
VerificationReport verify_fixture(const std::string& name, const CheckOptions& opts = {});

// Building blocks, exposed for tests and the CLI.
HopfPtr make_group_algebra_kZ(const Field& f, long window = 6);
HopfPtr make_binomial_kX(const Field& f, long window = 8);
HopfPtr make_sweedler_h4(const Field& f);
HopfPtr make_cyclic_group_algebra(const Field& f, long n);
HopfPtr make_left_zero_monoid_toy(const Field& f);  // 3-dim, noncommutative, no antipode
HopfPtr make_utilde(const Field& f, int n);
HopfPtr make_borel_plus(const Field& f, int n);
HopfPtr make_borel_minus(const Field& f, int n);

BilinearForm kz_power_braiding(HopfPtr kZ, const std::string& param);      // q^(t l)
BilinearForm kx_diagonal_braiding(HopfPtr kX, const std::string& param);   // i! alpha^i on the diagonal
BilinearForm kx_kz_pairing(HopfPtr kX, HopfPtr kZ);                        // (X^m, g^t) -> t^m
BilinearForm h4_braiding(HopfPtr h4, const std::string& param);            // the one-parameter family
BilinearForm borel_plus_braiding(HopfPtr bplus, int n);                    // beta_ij on generators
BilinearForm borel_minus_braiding(HopfPtr bminus, int n);                  // alpha_ij on generators
BilinearForm borel_pairing(HopfPtr bminus, HopfPtr bplus, int n);          // delta_ij on (y_i, x_j)

// Closed-form braiding on kZ |><| kX (sum over binomial splittings).
BilinearForm kz_kx_closed_sigma(ProductPtr prod, const std::string& alpha_param,
                                const std::string& q_param);

}  // namespace hopf
