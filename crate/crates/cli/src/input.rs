//! Reading partitions and their encodings from the command line or stdin.

use std::io::BufRead;

use seqcong::general::{n_decode, n_encode};
use seqcong::{from_c_notation, CNotation, FrequencyMap, GenSpec, NNotation, Partition};
use serde_json::Value;

use crate::Failure;

/// One input value in any of the accepted JSON forms.
#[derive(Clone, Debug)]
pub enum Input {
    /// `[7,5,5,4,1]`
    Standard(Partition),
    /// `{"c":[2,1,0,1]}`
    CNotation(CNotation),
    /// `{"f":[[1,2],[3,1]]}`, pairs of part and multiplicity in any order.
    Frequency(FrequencyMap),
    /// `{"n":[0,1],"A":"nat","B":"nat"}`
    NNotation(NNotation),
}

impl Input {
    pub fn parse(text: &str, horizon: usize) -> Result<Input, Failure> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Failure::Usage(format!("input {text:?} is not JSON: {e}")))?;
        let domain = |e: serde_json::Error| Failure::Domain(e.to_string());
        match &value {
            Value::Array(_) => Ok(Input::Standard(serde_json::from_value(value).map_err(domain)?)),
            Value::Object(map) if map.contains_key("c") => {
                Ok(Input::CNotation(serde_json::from_value(value).map_err(domain)?))
            }
            Value::Object(map) if map.contains_key("f") => {
                let pairs: Vec<(u64, u64)> =
                    serde_json::from_value(map["f"].clone()).map_err(domain)?;
                Ok(Input::Frequency(FrequencyMap::from_pairs(pairs)?))
            }
            Value::Object(map) if map.contains_key("n") => {
                let n: NNotation = serde_json::from_value(value).map_err(domain)?;
                let spec = n.spec().clone().with_horizon(horizon);
                Ok(Input::NNotation(n.retagged(spec)))
            }
            _ => Err(Failure::Usage(format!(
                "input {text:?} is not a partition array, {{\"c\":…}}, {{\"f\":…}} or {{\"n\":…,\"A\":…,\"B\":…}}"
            ))),
        }
    }

    pub fn to_partition(&self) -> Result<Partition, Failure> {
        Ok(match self {
            Input::Standard(p) => p.clone(),
            Input::CNotation(c) => from_c_notation(c)?,
            Input::Frequency(f) => f.to_partition()?,
            Input::NNotation(n) => n_decode(n)?,
        })
    }

    /// The n-notation itself, or the encoding of a partition under `spec`.
    pub fn to_n_notation(&self, spec: Option<&GenSpec>) -> Result<NNotation, Failure> {
        match (self, spec) {
            (Input::NNotation(n), _) => Ok(n.clone()),
            (_, Some(spec)) => Ok(n_encode(&self.to_partition()?, spec)?),
            (_, None) => Err(Failure::Usage(
                "this function needs an n-notation input or --A and --B".into(),
            )),
        }
    }
}

/// The `--input` value, or every non-blank stdin line.
pub fn read_inputs(input: Option<&str>, horizon: usize) -> Result<Vec<Input>, Failure> {
    match input {
        Some(text) => Ok(vec![Input::parse(text, horizon)?]),
        None => {
            let mut out = Vec::new();
            for line in std::io::stdin().lock().lines() {
                let line = line.map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
                if !line.trim().is_empty() {
                    out.push(Input::parse(&line, horizon)?);
                }
            }
            Ok(out)
        }
    }
}
