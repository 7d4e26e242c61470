#pragma once

#include <stdexcept>
#include <string>

namespace forumlens {

/// Base for recoverable toolkit errors (bad input, bad arguments).
/// The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class MalformedInput : public Error { public: using Error::Error; };
class DuplicateId : public Error { public: using Error::Error; };
class DanglingParent : public Error { public: using Error::Error; };
class BeforeCourseStart : public Error { public: using Error::Error; };
class UnknownThread : public Error { public: using Error::Error; };
class UnknownNode : public Error { public: using Error::Error; };
class NoMessages : public Error { public: using Error::Error; };
class TooFewThreads : public Error { public: using Error::Error; };
class DegenerateData : public Error { public: using Error::Error; };
class EmptyGraph : public Error { public: using Error::Error; };
class MetricMismatch : public Error { public: using Error::Error; };
class InvalidArgument : public Error { public: using Error::Error; };

/// Invariant violations inside the pipeline itself. The CLI maps these
/// to exit code 2.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace forumlens
