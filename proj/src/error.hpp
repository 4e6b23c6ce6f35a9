#pragma once

#include <stdexcept>
#include <string>

namespace dmorse {

// Failure classes shared across the library. Most of them mark parameter or
// energy regions where no bound state of the requested shape exists; they are
// mapped 1:1 onto the C API status codes.
enum class errc {
    invalid_argument,
    negative_discriminant_alpha8,
    negative_discriminant_alpha9,
    wrong_branch,
    domain_error,
    empty_domain,
    no_root,
    no_eigenvalue,
    non_decaying_boundary,
    divergent_norm,
    non_finite,
    invalid_state,
};

class solver_error : public std::runtime_error {
public:
    solver_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw solver_error(code, what);
}

} // namespace dmorse
