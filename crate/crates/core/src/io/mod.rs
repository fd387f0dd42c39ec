//! Text and JSON forms of polynomials.

mod format;
mod json;
mod parser;

pub use format::format;
pub use json::{
    from_json, from_json_str, parse_rational, to_json, to_json_string, PolyDocument, TermRecord,
    SCHEMA_VERSION,
};
pub use parser::{max_variable_index, parse, parse_with_parameter, MAX_EXPONENT};
