#ifndef TKC_ERROR_HPP
#define TKC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tkc {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (graph6 records, family specs, partition JSON).
class parse_error : public error {
public:
    using error::error;
};

/// Out-of-range vertex, loop edge, bad generator parameter.
class parameter_error : public error {
public:
    using error::error;
};

/// The coalition mode needs a larger minimum degree than the graph has.
class inadmissible_mode : public error {
public:
    using error::error;
};

/// Operation requires a connected graph.
class disconnected_graph : public error {
public:
    using error::error;
};

/// Exponential search refused because the instance exceeds its size guard.
class guard_exceeded : public error {
public:
    using error::error;
};

/// A documented precondition did not hold (e.g. non-dominating input set).
class precondition_failed : public error {
public:
    using error::error;
};

/// Certified lower bound exceeds certified upper bound. Always a bug or a
/// refuted theorem; never caught inside the library.
class certification_failure : public error {
public:
    using error::error;
};

} // namespace tkc

#endif
