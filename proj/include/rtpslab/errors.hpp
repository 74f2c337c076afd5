#pragma once

#include <stdexcept>
#include <string>

namespace rtpslab {

/// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- CDR serialization ---

/// Buffer exhausted mid-value while decoding.
class TruncatedError : public Error {
public:
    explicit TruncatedError(const std::string& what) : Error(what) {}
};

/// String to serialize contains an embedded NUL byte.
class EmbeddedNulError : public Error {
public:
    explicit EmbeddedNulError(const std::string& what) : Error(what) {}
};

/// Encapsulation header does not name a supported representation.
class UnknownEncapsulationError : public Error {
public:
    explicit UnknownEncapsulationError(const std::string& what) : Error(what) {}
};

// --- RTPS wire ---

/// Message does not start with the protocol magic.
class BadMagicError : public Error {
public:
    explicit BadMagicError(const std::string& what) : Error(what) {}
};

/// Fewer bytes than a full protocol header.
class TruncatedHeaderError : public Error {
public:
    explicit TruncatedHeaderError(const std::string& what) : Error(what) {}
};

/// Submessage header or body runs past the end of the message.
class TruncatedSubmessageError : public Error {
public:
    explicit TruncatedSubmessageError(const std::string& what) : Error(what) {}
};

/// Submessage body too long for the 16-bit length field.
class UnrepresentableLengthError : public Error {
public:
    explicit UnrepresentableLengthError(const std::string& what) : Error(what) {}
};

/// Writer asked to produce with an empty destination list.
class NoDestinationsError : public Error {
public:
    explicit NoDestinationsError(const std::string& what) : Error(what) {}
};

// --- node layer ---

class EmptyTopicError : public Error {
public:
    explicit EmptyTopicError(const std::string& what) : Error(what) {}
};

/// Same topic and direction registered twice on one node.
class DuplicateEntityError : public Error {
public:
    explicit DuplicateEntityError(const std::string& what) : Error(what) {}
};

class UnsupportedQosError : public Error {
public:
    explicit UnsupportedQosError(const std::string& what) : Error(what) {}
};

class TransportClosedError : public Error {
public:
    explicit TransportClosedError(const std::string& what) : Error(what) {}
};

// --- transport ---

class BindFailedError : public Error {
public:
    explicit BindFailedError(const std::string& what) : Error(what) {}
};

class SendFailedError : public Error {
public:
    explicit SendFailedError(const std::string& what) : Error(what) {}
};

class DatagramTooLargeError : public Error {
public:
    explicit DatagramTooLargeError(const std::string& what) : Error(what) {}
};

class InvalidModelError : public Error {
public:
    explicit InvalidModelError(const std::string& what) : Error(what) {}
};

// --- latency lab ---

class PeerUnreachableError : public Error {
public:
    explicit PeerUnreachableError(const std::string& what) : Error(what) {}
};

class EmptySampleSetError : public Error {
public:
    explicit EmptySampleSetError(const std::string& what) : Error(what) {}
};

class MissingReferenceError : public Error {
public:
    explicit MissingReferenceError(const std::string& what) : Error(what) {}
};

class NonpositiveReferenceError : public Error {
public:
    explicit NonpositiveReferenceError(const std::string& what) : Error(what) {}
};

class NonpositiveInputError : public Error {
public:
    explicit NonpositiveInputError(const std::string& what) : Error(what) {}
};

// --- config ---

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace rtpslab
