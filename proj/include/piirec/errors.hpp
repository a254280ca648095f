#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace piirec {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- corpus ---

class UnknownEntityTypeError : public Error {
 public:
  explicit UnknownEntityTypeError(const std::string& tag)
      : Error("unknown entity type: " + tag), tag_(tag) {}
  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
};

class MalformedPlaceholderError : public Error {
 public:
  MalformedPlaceholderError(const std::string& detail, size_t offset)
      : Error("malformed placeholder at byte " + std::to_string(offset) + ": " + detail),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

class MissingCandidateError : public Error {
 public:
  explicit MissingCandidateError(const std::string& slot)
      : Error("no candidate for slot " + slot) {}
};

class DatasetParseError : public Error {
 public:
  DatasetParseError(size_t line, const std::string& detail)
      : Error("dataset parse error at line " + std::to_string(line) + ": " + detail),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

// --- lm-interface ---

class TransportError : public Error {
 public:
  explicit TransportError(const std::string& detail, int attempts = 0)
      : Error("transport error: " + detail), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

class RefusalDetectedError : public Error {
 public:
  explicit RefusalDetectedError(const std::string& response)
      : Error("backend refused the request"), response_(response) {}
  const std::string& response() const { return response_; }

 private:
  std::string response_;
};

class ScoringUnsupportedError : public Error {
 public:
  explicit ScoringUnsupportedError(const std::string& detail)
      : Error("scoring unsupported: " + detail) {}
};

class OutOfRangeError : public Error {
 public:
  explicit OutOfRangeError(const std::string& detail) : Error("out of range: " + detail) {}
};

// --- toy-lab ---

class EmptyCorpusError : public Error {
 public:
  EmptyCorpusError() : Error("training corpus is empty") {}
};

// --- selection ---

class EmptyRangeError : public Error {
 public:
  EmptyRangeError() : Error("scoring range is empty") {}
};

class EmptySequenceError : public Error {
 public:
  EmptySequenceError() : Error("token sequence is empty") {}
};

class MissingReferenceError : public Error {
 public:
  MissingReferenceError() : Error("criterion requires a reference loss but none was given") {}
};

class NonpositiveDenominatorError : public Error {
 public:
  explicit NonpositiveDenominatorError(double denom)
      : Error("criterion denominator is not positive: " + std::to_string(denom)) {}
};

// --- generation ---

class UnresolvableTemplateError : public Error {
 public:
  explicit UnresolvableTemplateError(const std::string& hole)
      : Error("prompt template hole cannot be resolved: " + hole) {}
};

// --- evaluation ---

class BadBucketsError : public Error {
 public:
  explicit BadBucketsError(const std::string& detail) : Error("bad buckets: " + detail) {}
};

class ZeroBaselineAccuracyError : public Error {
 public:
  ZeroBaselineAccuracyError() : Error("baseline accuracy at b=0 is zero; ratio undefined") {}
};

// --- cli ---

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& detail) : Error("config error: " + detail) {}
};

}  // namespace piirec
