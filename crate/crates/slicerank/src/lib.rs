//! File formats, parallel search, verification suites and the command line
//! around `slicerank_core`.

/// Evaluates `$body` with `$field` bound to a reference to the concrete
/// field named by a `FieldSpec`.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $field:ident => $body:expr) => {
        match $spec {
            slicerank_core::FieldSpec::Prime(p) => {
                let $field = &slicerank_core::Fp::new(p)?;
                $body
            }
            slicerank_core::FieldSpec::Rational => {
                let $field = &slicerank_core::Rationals;
                $body
            }
        }
    };
}

pub mod parse;
pub mod report;
pub mod search;
pub mod suites;
pub mod cli;
