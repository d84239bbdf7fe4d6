use std::io::Write;
use std::path::Path;

/// A CSV table preceded by `#`-prefixed metadata lines.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub metadata: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(command: &str, metadata: Vec<String>, header: &[&str]) -> Self {
        let mut meta = vec![
            format!("schurweyl {}", env!("CARGO_PKG_VERSION")),
            format!("command={command}"),
        ];
        meta.extend(metadata);
        Self {
            metadata: meta,
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> csv::Result<String> {
        let mut buf = Vec::new();
        for line in &self.metadata {
            writeln!(buf, "# {line}")?;
        }
        {
            let mut writer = csv::Writer::from_writer(&mut buf);
            writer.write_record(&self.header)?;
            for row in &self.rows {
                writer.write_record(row)?;
            }
            writer.flush()?;
        }
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }

    /// Writes to `path`, or to stdout when `path` is `None`.
    pub fn write_to(&self, path: Option<&Path>) -> anyhow::Result<()> {
        let text = self.render()?;
        match path {
            Some(p) => std::fs::write(p, text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

/// Shortest round-trip formatting, so identical values give identical bytes.
pub fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

pub fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}
