use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::check::{Checker, LabeledModule};
use super::report::{BoundReport, Inequality, Params, Verdict};
use crate::error::Result;
use crate::resolution::RingPresentation;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Clone, Debug)]
pub struct CorpusCase {
    pub ring: Arc<RingPresentation>,
    pub module: LabeledModule,
    pub inequality: Inequality,
    pub params: Params,
    pub homological: usize,
    pub degree: Option<i64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub satisfied: usize,
    pub violated: usize,
    pub inconclusive: usize,
    pub truncated: usize,
}

impl Summary {
    pub fn add(&mut self, r: &BoundReport) {
        self.cases += 1;
        match r.verdict {
            Verdict::Satisfied => self.satisfied += 1,
            Verdict::Violated => self.violated += 1,
            Verdict::Inconclusive => self.inconclusive += 1,
        }
        if r.is_truncated() {
            self.truncated += 1;
        }
    }

    /// 2 on any violation; under `strict`, 3 on any inconclusive verdict or
    /// truncated input; otherwise 0.
    pub fn exit_code(&self, strict: bool) -> i32 {
        if self.violated > 0 {
            EXIT_VIOLATION
        } else if strict && (self.inconclusive > 0 || self.truncated > 0) {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "summary: cases={} satisfied={} violated={} inconclusive={} truncated={}\n",
            self.cases, self.satisfied, self.violated, self.inconclusive, self.truncated
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusOutcome {
    pub reports: Vec<BoundReport>,
    pub summary: Summary,
}

/// Checks every case in order, sharing one cache per ring and cutoff pair.
pub fn corpus_run(cases: &[CorpusCase], inject_rhs: bool) -> Result<CorpusOutcome> {
    let mut checkers: HashMap<(String, usize, Option<i64>), Checker> = HashMap::new();
    let mut reports = Vec::with_capacity(cases.len());
    let mut summary = Summary::default();
    for case in cases {
        let key = (case.ring.describe(), case.homological, case.degree);
        let checker = checkers.entry(key).or_insert_with(|| {
            Checker::new(case.ring.clone(), case.homological, case.degree)
                .with_rhs_injection(inject_rhs)
        });
        let module = if Arc::ptr_eq(case.module.module.ring(), checker.ring()) {
            case.module.clone()
        } else {
            LabeledModule {
                label: case.module.label.clone(),
                module: case.module.module.rebase(checker.ring().clone())?,
            }
        };
        let r = checker.check(case.inequality, &module, &case.params)?;
        summary.add(&r);
        reports.push(r);
    }
    Ok(CorpusOutcome { reports, summary })
}
