use serde::Serialize;

/// One verb's output: the inputs it was given, tables, and the cross-checks
/// that were run before anything was printed.
#[derive(Debug, Serialize)]
pub struct Report {
    pub verb: String,
    pub inputs: Vec<(String, String)>,
    pub sections: Vec<Section>,
    pub checks: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Section {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Section {
    pub fn new(title: &str, header: Vec<String>) -> Self {
        Section { title: title.into(), header, rows: Vec::new() }
    }

    /// Two-column key/value section.
    pub fn facts(title: &str, facts: Vec<(&str, String)>) -> Self {
        let mut s = Section::new(title, vec!["key".into(), "value".into()]);
        s.rows = facts.into_iter().map(|(k, v)| vec![k.into(), v]).collect();
        s
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

impl Report {
    pub fn new(verb: &str, inputs: Vec<(String, String)>) -> Self {
        Report { verb: verb.into(), inputs, sections: Vec::new(), checks: Vec::new() }
    }

    pub fn section(&mut self, s: Section) {
        self.sections.push(s);
    }

    pub fn check(&mut self, what: impl Into<String>) {
        self.checks.push(what.into());
    }

    pub fn tsv(&self) -> String {
        let mut out = format!("# verb\t{}\n", self.verb);
        for (k, v) in &self.inputs {
            out.push_str(&format!("# {k}\t{v}\n"));
        }
        for s in &self.sections {
            out.push_str(&format!("\n[{}]\n{}\n", s.title, s.header.join("\t")));
            for row in &s.rows {
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
        }
        if !self.checks.is_empty() {
            out.push('\n');
            for c in &self.checks {
                out.push_str(&format!("# check\t{c}\n"));
            }
        }
        out
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
