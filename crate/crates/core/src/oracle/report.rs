use std::fmt::Write;

use serde_json::{json, Value};

/// One predicted/observed pair.
#[derive(Clone, Debug)]
pub struct Check {
    pub subject: String,
    pub predicted: String,
    pub observed: String,
    pub ok: bool,
}

/// A family of property instances.
#[derive(Clone, Debug, Default)]
pub struct Section {
    pub name: String,
    pub instances: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl Section {
    pub fn new(name: &str) -> Section {
        Section { name: name.into(), ..Default::default() }
    }

    pub fn assert(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(title: &str) -> Report {
        Report { title: title.into(), ..Default::default() }
    }

    pub fn check(&mut self, subject: String, predicted: String, observed: String, ok: bool) {
        self.checks.push(Check { subject, predicted, observed, ok });
    }

    pub fn add(&mut self, s: Section) {
        self.sections.push(s);
    }

    pub fn merge(&mut self, o: Report) {
        self.checks.extend(o.checks);
        self.sections.extend(o.sections);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok) && self.sections.iter().all(Section::ok)
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "title": self.title,
            "verdict": self.verdict(),
            "checks": self.checks.iter().map(|c| json!({
                "subject": c.subject, "predicted": c.predicted, "observed": c.observed, "ok": c.ok,
            })).collect::<Vec<_>>(),
            "properties": self.sections.iter().map(|s| json!({
                "name": s.name, "instances": s.instances, "skipped": s.skipped, "failures": s.failures,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let w = self.checks.iter().map(|c| c.subject.len()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = if c.ok { "ok " } else { "BAD" };
            writeln!(s, "{mark} {:w$}  predicted {}  observed {}", c.subject, c.predicted, c.observed).unwrap();
        }
        for sec in &self.sections {
            writeln!(
                s,
                "{} {}: {} instances, {} skipped, {} failures",
                if sec.ok() { "ok " } else { "BAD" },
                sec.name,
                sec.instances,
                sec.skipped,
                sec.failures.len()
            )
            .unwrap();
            for f in sec.failures.iter().take(5) {
                writeln!(s, "    {f}").unwrap();
            }
        }
        writeln!(s, "verdict: {}", self.verdict()).unwrap();
        s
    }
}
