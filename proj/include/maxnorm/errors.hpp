#ifndef MAXNORM_ERRORS_HPP
#define MAXNORM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxnorm
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error
{
public:
  DegreeMismatch(std::size_t a, std::size_t b)
  : Error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b))
  {}
};

/// An input violates the documented precondition of an operation.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

/// A cap or search budget was exhausted. Never used to signal a wrong answer.
class ResourceError : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  ParseError(std::size_t line, std::string const &what)
  : Error("line " + std::to_string(line) + ": " + what), line_(line)
  {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class UnknownName : public Error
{
public:
  using Error::Error;
};

} // namespace maxnorm

#endif // MAXNORM_ERRORS_HPP
