// Error types shared across the library.
//
// InternalInconsistencyError signals that two independent computation paths
// disagreed (Descartes vs Sturm, closed form vs term-by-term, ...).  It is
// never thrown on a correct build; the CLI maps it to exit code 1.

#ifndef TORUSSPEC_ERRORS_HPP
#define TORUSSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torusspec {

class InternalInconsistencyError : public std::logic_error {
public:
    explicit InternalInconsistencyError(const std::string& what)
        : std::logic_error(what) {}
};

} // namespace torusspec

#endif
