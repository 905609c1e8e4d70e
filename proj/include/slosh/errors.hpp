#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace slosh {

/// Classified failures; the CLI maps these onto its exit-code contract.
enum class Errc {
    invalid_params,       // physical constants or gains out of range
    invalid_grid,         // grid too coarse or inconsistent
    boundary_velocity,    // v(0) or v(L) not pinned to zero
    nonpositive_level,    // min h <= 0 in a state that claims validity
    mass_mismatch,        // dx*sum(h) drifted away from m
    positivity_lost,      // solver left the physical domain mid-run
    gain_condition,       // k < q*theta(r) violated, certificate void
    certificate_domain,   // r >= R requested from a certificate function
    infeasible_ic,        // initial-condition target cannot be met
    nonuniform_sampling,  // time differencing asked on non-uniform samples
    config_error,         // scenario file rejected
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string what) : std::runtime_error(std::move(what)), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

namespace detail {
[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }
}  // namespace detail

#define SLOSH_REQUIRE(cond, code, what)                        \
    do {                                                       \
        if (!(cond)) ::slosh::detail::fail((code), (what));    \
    } while (false)

}  // namespace slosh
