use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::resolution::{fmt_rational, Extended, RateValue, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Inequality {
    /// `rate_{R^(c)}(M) <= ⌈max{rate_R(M), rat(R)}/c⌉ + max{0, ⌈t_0(M)/c⌉}`.
    MainThm,
    /// `rate_{R^(c)}(m^s(s)) <= ⌈rat(R)/c⌉`.
    MainThmPower,
    /// `t_i(m^s(s)) <= t_i(m(1))`.
    Maxi,
    /// `t_n^{R^(c)}(R^(c,d)) <= max_α Σ ⌈t_{α_j}(m(1))/c⌉`.
    VerSyz,
    /// `rat(R^(c)) <= ⌈rat(R)/c⌉`.
    Backelin,
    /// `rate_{R^(c)}(M) <= max{⌈rate_R(M)/c⌉, 1}` for `M` generated in degree
    /// zero and `c >= rat(R)`.
    Aramova,
    /// `reg_{R^(c)}(R^(c,d)) = 0` for `c >= rat(R)`.
    RegZero,
    /// `rate_R(M) <= max{rate_S(M), rate_S(R)} + max{0, t_0(M)}`.
    RatIneq,
}

impl Inequality {
    pub const ALL: [Inequality; 8] = [
        Inequality::MainThm,
        Inequality::MainThmPower,
        Inequality::Maxi,
        Inequality::VerSyz,
        Inequality::Backelin,
        Inequality::Aramova,
        Inequality::RegZero,
        Inequality::RatIneq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Inequality::MainThm => "mainthm",
            Inequality::MainThmPower => "mainthm-power",
            Inequality::Maxi => "maxi",
            Inequality::VerSyz => "versyz",
            Inequality::Backelin => "backelin",
            Inequality::Aramova => "aramova",
            Inequality::RegZero => "reg-zero",
            Inequality::RatIneq => "ratineq",
        }
    }
}

impl FromStr for Inequality {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Inequality::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown inequality '{s}'")))
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Inequality {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Satisfied,
    Violated,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Satisfied => "satisfied",
            Verdict::Violated => "violated",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// One side of a comparison: a value (absent when it cannot be evaluated)
/// and whether a degree cutoff was hit while computing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Side {
    pub value: Option<RateValue>,
    pub truncated: bool,
}

impl Side {
    pub fn exact(value: RateValue) -> Self {
        Side {
            value: Some(value),
            truncated: false,
        }
    }

    pub fn new(value: RateValue, truncated: bool) -> Self {
        Side {
            value: Some(value),
            truncated,
        }
    }

    pub fn undefined(truncated: bool) -> Self {
        Side {
            value: None,
            truncated,
        }
    }

    pub fn integer(v: i64, truncated: bool) -> Self {
        Side::new(Extended::Finite(Rational::from_integer(v)), truncated)
    }
}

/// Truncation only lowers computed values, and every right-hand side is
/// nondecreasing in its inputs. Hence an excess is a violation unless the
/// right-hand side was truncated, and a fit is a proof unless the left-hand
/// side was.
pub fn decide(lhs: Side, rhs: Side) -> Verdict {
    let Some(l) = lhs.value else {
        return Verdict::Inconclusive;
    };
    if l == Extended::NegInf && !lhs.truncated {
        return Verdict::Satisfied;
    }
    let Some(r) = rhs.value else {
        return Verdict::Inconclusive;
    };
    if l > r {
        if rhs.truncated {
            Verdict::Inconclusive
        } else {
            Verdict::Violated
        }
    } else if lhs.truncated {
        Verdict::Inconclusive
    } else {
        Verdict::Satisfied
    }
}

/// `rhs - lhs` as text: `inf` when the left side is minus infinity.
pub fn slack(lhs: Option<RateValue>, rhs: Option<RateValue>) -> Option<String> {
    match (lhs?, rhs?) {
        (Extended::NegInf, _) => Some("inf".into()),
        (_, Extended::NegInf) => Some("-inf".into()),
        (Extended::Finite(l), Extended::Finite(r)) => Some(fmt_rational(r - l)),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, v) in [("c", self.c), ("s", self.s), ("d", self.d)] {
            if let Some(v) = v {
                parts.push(format!("{k}={v}"));
            }
        }
        if parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReportCutoffs {
    #[serde(rename = "N")]
    pub n: usize,
    /// Absent when each resolution used its own default degree cutoff.
    #[serde(rename = "D", skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
}

fn ser_opt_value<S: serde::Serializer>(
    v: &Option<RateValue>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// The outcome of checking one inequality on one ring and module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub inequality: Inequality,
    pub ring: String,
    pub module: String,
    pub params: Params,
    /// For inequalities over a sequence, the index with the least slack.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<i64>,
    #[serde(serialize_with = "ser_opt_value")]
    pub lhs: Option<RateValue>,
    #[serde(serialize_with = "ser_opt_value")]
    pub rhs: Option<RateValue>,
    pub verdict: Verdict,
    pub slack: Option<String>,
    pub cutoffs: ReportCutoffs,
    pub flags: Vec<String>,
}

fn show(v: &Option<RateValue>) -> String {
    v.map_or_else(|| "undefined".to_string(), |v| v.to_string())
}

impl BoundReport {
    pub fn to_text(&self) -> String {
        let mut lines = vec![
            format!("inequality: {}", self.inequality),
            format!("ring: {}", self.ring),
            format!("module: {}", self.module),
            format!("params: {}", self.params),
        ];
        if let Some(i) = self.index {
            lines.push(format!("index: {i}"));
        }
        lines.push(format!("lhs: {}", show(&self.lhs)));
        lines.push(format!("rhs: {}", show(&self.rhs)));
        lines.push(format!(
            "slack: {}",
            self.slack.as_deref().unwrap_or("undefined")
        ));
        lines.push(format!("verdict: {}", self.verdict));
        let d = self
            .cutoffs
            .d
            .map_or("default".to_string(), |d| d.to_string());
        lines.push(format!("cutoffs: N={} D={d}", self.cutoffs.n));
        let flags = if self.flags.is_empty() {
            "-".to_string()
        } else {
            self.flags.join(" ")
        };
        lines.push(format!("flags: {flags}"));
        lines.join("\n") + "\n"
    }

    /// Whether any computed input hit a degree cutoff.
    pub fn is_truncated(&self) -> bool {
        self.flags.iter().any(|f| f.ends_with("truncated"))
    }
}
