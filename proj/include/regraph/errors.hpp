#ifndef REGRAPH_ERRORS_HPP
#define REGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace regraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input-file diagnostics carry the offending 1-based line.
struct ParseError : Error {
    int line;
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
};

struct NoSupportError : Error {
    NoSupportError() : Error("graph has no support (no spanning cycle forest)") {}
};

struct NoTotalSupportError : Error {
    NoTotalSupportError() : Error("graph does not have total support") {}
};

struct NotArbitrarilyRegularizableError : Error {
    explicit NotArbitrarilyRegularizableError(const std::string& why)
        : Error("graph is not arbitrarily regularizable: " + why) {}
};

struct AcyclicOnlyTrivialError : Error {
    AcyclicOnlyTrivialError()
        : Error("the system B w = 0 has only the trivial solution w = 0") {}
};

struct ZeroRowOrColumnError : Error {
    int node;   // 1-based
    bool row;   // true: zero row (no outgoing edges), false: zero column
    ZeroRowOrColumnError(int node, bool row)
        : Error("node " + std::to_string(node) +
                (row ? " has no outgoing edges (zero row)"
                     : " has no incoming edges (zero column)")),
          node(node), row(row) {}
};

struct TooLargeError : Error {
    int n, max_n;
    TooLargeError(int n, int max_n)
        : Error("graph too large: n = " + std::to_string(n) + " exceeds cap " +
                std::to_string(max_n)),
          n(n), max_n(max_n) {}
};

struct NotPerfectError : Error {
    NotPerfectError() : Error("matching is not perfect") {}
};

}  // namespace regraph

#endif
