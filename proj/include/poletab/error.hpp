#pragma once

#include <stdexcept>
#include <string>

namespace poletab {

enum class errc {
    invalid_input,
    not_lr,
    no_ebp,
    budget_exceeded,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace poletab
