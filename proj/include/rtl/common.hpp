#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtl {

// Input outside an operation's stated preconditions. The CLI maps it to exit 2.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured enumeration cap would be exceeded; `required` is the size needed.
class CapExceeded : public PreconditionError {
public:
    CapExceeded(const std::string& what, std::uint64_t required)
        : PreconditionError(what), required_(required) {}
    std::uint64_t required() const { return required_; }

private:
    std::uint64_t required_;
};

// Sorted, duplicate-free list of 1-based node numbers.
using NodeSet = std::vector<int>;

NodeSet normalize(NodeSet s);
bool is_subset(const NodeSet& a, const NodeSet& b);
std::string join(const std::vector<int>& v, const std::string& sep = ",");
std::vector<int> parse_int_list(const std::string& s);

// Default caps, each overridable through the RTL_CAPS environment variable
// ("group=200000,entry=24,orbit=10000000,idem=1048576,degree=64").
struct Caps {
    std::uint64_t group_order = 200000;
    std::uint64_t entry = 24;
    std::uint64_t orbit_group = 10000000;
    std::uint64_t idempotent = 1u << 20;
    int degree = 64;
};

Caps caps_from_env();

}  // namespace rtl
