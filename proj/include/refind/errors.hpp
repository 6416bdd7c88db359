// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace refind {

/// Root of the refind error hierarchy. The four direct children map onto
/// the CLI exit-code contract: ConfigError=2, IoError=3, DataError=4,
/// ProviderError=5.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public IoError {
public:
    ParseError(const std::string& msg, std::size_t line)
        : IoError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class DataError : public Error {
public:
    using Error::Error;
};

/// Document bytes cannot be decoded well enough to scan.
class MalformedHtml : public DataError {
public:
    using DataError::DataError;
};

class InvalidUri : public DataError {
public:
    using DataError::DataError;
};

class EmptyTitle : public DataError {
public:
    using DataError::DataError;
};

class UnknownFeature : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class UnknownLexicon : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// A record whose status is still Unknown reached an evaluation step.
class UnlabeledRecord : public DataError {
public:
    using DataError::DataError;
};

class DegenerateTable : public DataError {
public:
    using DataError::DataError;
};

class MismatchedTotals : public DataError {
public:
    using DataError::DataError;
};

class EmptyMatrix : public DataError {
public:
    using DataError::DataError;
};

class EmptyInput : public DataError {
public:
    using DataError::DataError;
};

class ProviderError : public Error {
public:
    using Error::Error;
};

class RateLimited : public ProviderError {
public:
    RateLimited(const std::string& msg, double retry_after_seconds)
        : ProviderError(msg), retry_after_seconds_(retry_after_seconds) {}
    double retry_after_seconds() const { return retry_after_seconds_; }

private:
    double retry_after_seconds_;
};

class QuotaExceeded : public ProviderError {
public:
    using ProviderError::ProviderError;
};

}  // namespace refind
