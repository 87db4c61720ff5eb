use std::fs::File;
use std::io::{self, BufWriter, Write};

use anyhow::{Context, Result};
use serde::Serialize;

/// Shortest representation that parses back to the same `f64`.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

pub struct Sink {
    w: Box<dyn Write>,
}

impl Sink {
    pub fn open(path: Option<&str>) -> Result<Self> {
        let w: Box<dyn Write> = match path {
            Some(p) if p != "-" => {
                Box::new(BufWriter::new(File::create(p).with_context(|| format!("cannot create `{p}`"))?))
            }
            _ => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Sink { w })
    }

    pub fn line(&mut self, fields: &[String]) -> Result<()> {
        writeln!(self.w, "{}", fields.join(","))?;
        Ok(())
    }

    pub fn header(&mut self, names: &[&str]) -> Result<()> {
        writeln!(self.w, "{}", names.join(","))?;
        Ok(())
    }

    pub fn json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        serde_json::to_writer_pretty(&mut self.w, value)?;
        writeln!(self.w)?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.w.flush()?;
        Ok(())
    }
}
