#ifndef MCDAKIT_ERRORS_HPP
#define MCDAKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mcdakit {

/// Malformed content in an input file (bad header, unparsable number, ...).
/// Messages carry the file and the row/column position where known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem-level failure: file missing, unreadable, or unwritable.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mcdakit

#endif
