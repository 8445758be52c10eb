#include "efae/types.hpp"

namespace efae {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeValue: return "NEGATIVE_VALUE";
    case ErrorCode::DuplicateId: return "DUPLICATE_ID";
    case ErrorCode::BadQuery: return "BAD_QUERY";
    case ErrorCode::OverflowRisk: return "OVERFLOW_RISK";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::WrongVariant: return "WRONG_VARIANT";
    case ErrorCode::ValuesTooLarge: return "VALUES_TOO_LARGE";
    case ErrorCode::GammaNotEf: return "GAMMA_NOT_EF";
    case ErrorCode::MalformedGraph: return "MALFORMED_GRAPH";
    case ErrorCode::NotAClique: return "NOT_A_CLIQUE";
    case ErrorCode::BadParams: return "BAD_PARAMS";
    case ErrorCode::InternalInvariantViolation: return "INTERNAL_INVARIANT_VIOLATION";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::SchemaError: return "SCHEMA_ERROR";
    case ErrorCode::GenRetryExhausted: return "GEN_RETRY_EXHAUSTED";
  }
  return "UNKNOWN";
}

const char* to_string(Query::Variant variant) {
  switch (variant) {
    case Query::Variant::Efae: return "EFAE";
    case Query::Variant::Refae: return "REFAE";
    case Query::Variant::Fefae: return "FEFAE";
  }
  return "UNKNOWN";
}

const char* to_string(Answer answer) {
  switch (answer) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    case Answer::ResourceLimit: return "RESOURCE_LIMIT";
  }
  return "UNKNOWN";
}

Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "addition overflow");
  return out;
}

Value checked_mul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "multiplication overflow");
  return out;
}

}  // namespace efae
