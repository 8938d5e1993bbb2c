#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fusionkit {

// Exit-code classes shared with the CLI: 2 = invalid input, 3 = cap/size
// exceeded, 4 = internal consistency failure.
class Error : public std::runtime_error {
public:
	explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidTypeError : public Error {
public:
	using Error::Error;
};

class ZeroLevelError : public Error {
public:
	ZeroLevelError() : Error("twisting level n must be nonzero") {}
};

class PreconditionError : public Error {
public:
	using Error::Error;
};

class UnsupportedTypeError : public Error {
public:
	using Error::Error;
};

class CapExceededError : public Error {
public:
	CapExceededError(std::size_t cap, const std::string& what_exceeded)
	    : Error(what_exceeded + " exceeds cap " + std::to_string(cap)), cap_(cap)
	{
	}
	std::size_t cap() const { return cap_; }

private:
	std::size_t cap_;
};

class TooLargeError : public Error {
public:
	using Error::Error;
};

// Raised when an internal identity fails (e.g. a character sum that must be
// divisible by |W| is not). Never expected on a correct build.
class InternalError : public Error {
public:
	using Error::Error;
};

class MismatchError : public InternalError {
public:
	using InternalError::InternalError;
};

} // namespace fusionkit
