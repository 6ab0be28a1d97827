#pragma once

#include <stdexcept>
#include <string>

namespace digitsum {

// Stable error codes; the CLI prints them verbatim on stderr and maps them
// to exit statuses (usage-style codes -> 2, verification-style codes -> 1).
enum class errc {
    invalid_base,
    invalid_width,
    malformed_expansion,
    undefined_valuation,
    invalid_prime,
    incomplete_factorization,
    rational_dependence,
    precondition,
    hypothesis_violation,
    resource_limit,
    precision_exhausted,
    certificate_failure,
    domain_error,
    parse_error,
    range_error,
    transport_error,
    io_error,
    invalid_params,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_base: return "invalid-base";
        case errc::invalid_width: return "invalid-width";
        case errc::malformed_expansion: return "malformed-expansion";
        case errc::undefined_valuation: return "undefined-valuation";
        case errc::invalid_prime: return "invalid-prime";
        case errc::incomplete_factorization: return "incomplete-factorization";
        case errc::rational_dependence: return "rational-dependence";
        case errc::precondition: return "precondition";
        case errc::hypothesis_violation: return "hypothesis-violation";
        case errc::resource_limit: return "resource-limit";
        case errc::precision_exhausted: return "precision-exhausted";
        case errc::certificate_failure: return "certificate-failure";
        case errc::domain_error: return "domain-error";
        case errc::parse_error: return "parse-error";
        case errc::range_error: return "range-error";
        case errc::transport_error: return "transport-error";
        case errc::io_error: return "io-error";
        case errc::invalid_params: return "invalid-params";
    }
    return "unknown";
}

}  // namespace digitsum
