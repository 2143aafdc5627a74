#pragma once

#include <stdexcept>
#include <string>

namespace qreduce {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class PoleAtPoint : public Error {
public:
    explicit PoleAtPoint(const std::string& msg) : Error(msg) {}
};

class ForbiddenPoint : public Error {
public:
    explicit ForbiddenPoint(const std::string& msg) : Error(msg) {}
};

class PoleAtOne : public Error {
public:
    explicit PoleAtOne(const std::string& msg) : Error(msg) {}
};

class InvalidRank : public Error {
public:
    explicit InvalidRank(const std::string& msg) : Error(msg) {}
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

class InvalidSplit : public Error {
public:
    explicit InvalidSplit(const std::string& msg) : Error(msg) {}
};

class DegreeCapExceeded : public Error {
public:
    explicit DegreeCapExceeded(const std::string& msg) : Error(msg) {}
};

class NotHighest : public Error {
public:
    explicit NotHighest(const std::string& msg) : Error(msg) {}
};

class VanishingDenominator : public Error {
public:
    explicit VanishingDenominator(const std::string& msg) : Error(msg) {}
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

class EmptyBox : public Error {
public:
    explicit EmptyBox(const std::string& msg) : Error(msg) {}
};

class InadmissibleRow : public Error {
public:
    explicit InadmissibleRow(const std::string& msg) : Error(msg) {}
};

class BetweenViolation : public Error {
public:
    explicit BetweenViolation(const std::string& msg) : Error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

} // namespace qreduce
