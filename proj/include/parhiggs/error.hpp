#pragma once

#include <stdexcept>
#include <string>

namespace parhiggs {

// Malformed input or a violated type invariant. `where` is a JSON pointer
// when the failure can be located inside a document.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what, std::string where = {})
        : std::runtime_error(what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

}  // namespace parhiggs
