use crate::args::Format;
use crate::CliError;
use serde::Serialize;

/// A report in both structured and tabular form.
pub struct Rendered {
    pub json: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Rendered {
    pub fn new<T: Serialize>(
        value: &T,
        header: &[&str],
        rows: Vec<Vec<String>>,
    ) -> Result<Rendered, CliError> {
        let json =
            serde_json::to_string_pretty(value).map_err(|e| CliError::internal(e.to_string()))?;
        Ok(Rendered {
            json,
            header: header.iter().map(|s| s.to_string()).collect(),
            rows,
        })
    }

    /// Two-column `field,value` form.
    pub fn fields<T: Serialize>(
        value: &T,
        fields: Vec<(&str, String)>,
    ) -> Result<Rendered, CliError> {
        let rows = fields
            .into_iter()
            .map(|(k, v)| vec![k.to_string(), v])
            .collect();
        Rendered::new(value, &["field", "value"], rows)
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(format!("{}\n", self.json)),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header)
                    .map_err(|e| CliError::internal(e.to_string()))?;
                for r in &self.rows {
                    w.write_record(r)
                        .map_err(|e| CliError::internal(e.to_string()))?;
                }
                let bytes = w
                    .into_inner()
                    .map_err(|e| CliError::internal(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| CliError::internal(e.to_string()))
            }
            Format::Table => Ok(table(&self.header, &self.rows)),
        }
    }
}

fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| c.clone() + &" ".repeat(w - c.chars().count()))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    out += &(widths
        .iter()
        .map(|w| "-".repeat(*w))
        .collect::<Vec<_>>()
        .join("  ")
        + "\n");
    for r in rows {
        out += &line(r);
    }
    out
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}
