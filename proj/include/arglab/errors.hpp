#ifndef ARGLAB_ERRORS_HPP
#define ARGLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arglab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed line in an AF or claims file. line is 1-based, 0 when the
// input did not come from a file.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, int line)
        : Error(what), line(line) {}
    int line;
};

class DuplicateArgument : public Error {
public:
    DuplicateArgument(const std::string& id, int line)
        : Error("duplicate argument declaration: " + id), id(id), line(line) {}
    std::string id;
    int line;
};

// An attack endpoint with no matching arg(...) declaration.
class UndeclaredArgument : public Error {
public:
    UndeclaredArgument(const std::string& id, int line)
        : Error("attack references undeclared argument: " + id), id(id), line(line) {}
    std::string id;
    int line;
};

// Query for an argument that is not part of the framework.
class UnknownArgument : public Error {
public:
    explicit UnknownArgument(const std::string& id)
        : Error("unknown argument: " + id), id(id) {}
    std::string id;
};

// A labelling that is not total over the framework's arguments.
class PartialLabelling : public Error {
public:
    PartialLabelling(std::size_t labelled, std::size_t expected)
        : Error("labelling covers " + std::to_string(labelled) + " arguments, framework has "
                + std::to_string(expected)),
          labelled(labelled), expected(expected) {}
    std::size_t labelled;
    std::size_t expected;
};

class OracleBoundExceeded : public Error {
public:
    OracleBoundExceeded(std::size_t n, std::size_t bound)
        : Error("framework has " + std::to_string(n) + " arguments, oracle bound is "
                + std::to_string(bound)),
          n(n), bound(bound) {}
    std::size_t n;
    std::size_t bound;
};

// Justification status that complete semantics can never produce.
class UnrealizableStatus : public Error {
public:
    using Error::Error;
};

// Statement query outside the claim map's vocabulary.
class OffVocabulary : public Error {
public:
    explicit OffVocabulary(const std::string& statement)
        : Error("statement not in vocabulary: " + statement), statement(statement) {}
    std::string statement;
};

// A statement paired with two distinct contraries.
class ConflictingContrary : public Error {
public:
    explicit ConflictingContrary(const std::string& statement)
        : Error("conflicting contrary declarations for: " + statement), statement(statement) {}
    std::string statement;
};

// An argument assigned more than one conclusion.
class DuplicateConclusion : public Error {
public:
    explicit DuplicateConclusion(const std::string& argument)
        : Error("duplicate conclusion for argument: " + argument), argument(argument) {}
    std::string argument;
};

} // namespace arglab

#endif
