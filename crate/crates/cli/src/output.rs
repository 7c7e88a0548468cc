//! Deterministic CSV assembly. Floats are always written in
//! scientific notation with 17 significant digits so repeated runs of
//! the same configuration are byte-identical.

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Default)]
pub struct Csv {
    buf: String,
}

impl Csv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn comment(&mut self, text: &str) {
        self.buf.push_str("# ");
        self.buf.push_str(text);
        self.buf.push('\n');
    }

    pub fn header(&mut self, columns: &[&str]) {
        self.buf.push_str(&columns.join(","));
        self.buf.push('\n');
    }

    pub fn row<I>(&mut self, cells: I)
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let mut first = true;
        for cell in cells {
            if !first {
                self.buf.push(',');
            }
            self.buf.push_str(cell.as_ref());
            first = false;
        }
        self.buf.push('\n');
    }

    pub fn into_string(self) -> String {
        self.buf
    }
}
