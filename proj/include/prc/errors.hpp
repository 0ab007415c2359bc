#ifndef PRC_ERRORS_HPP
#define PRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroInverse : public Error { public: using Error::Error; };
class NotDivisor : public Error { public: using Error::Error; };
class NotResidue : public Error { public: using Error::Error; };
class CoefficientOutsideBaseField : public Error { public: using Error::Error; };
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& msg, unsigned long long required)
        : Error(msg), required_(required) {}
    unsigned long long required() const { return required_; }
private:
    unsigned long long required_;
};
class TooManySubsets : public Error { public: using Error::Error; };
class NotSubgroup : public Error { public: using Error::Error; };
class CyclicActionFailed : public Error { public: using Error::Error; };
class NonUniformBlocks : public Error { public: using Error::Error; };
class BlockSmallerThanT : public Error { public: using Error::Error; };
class NotIndependent : public Error { public: using Error::Error; };
class GroupNotAutomorphism : public Error { public: using Error::Error; };
class DegreeZero : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

} // namespace prc

#endif
