#pragma once

#include <stdexcept>
#include <string>

namespace tpt {

// Base for everything this library throws on a domain failure. The CLI maps
// any Error to exit code 1; usage problems are handled by the parser itself.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor/shape mismatches, non-finite values, malformed lattices.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration: bad ranges, missing pools, unknown config keys.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Token ids outside the vocabulary contract.
class VocabError : public Error {
 public:
  using Error::Error;
};

// File parsing (corpus JSONL, config JSON). Carries a line number when known.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Checkpoint store problems: missing tensors, bad magic, truncated files.
class CheckpointError : public Error {
 public:
  using Error::Error;
};

// Violated call contracts (empty n-best, non-scalar loss, undefined ratio).
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace tpt
