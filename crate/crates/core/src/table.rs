use rayon::prelude::*;

/// Square operation table over dense element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    n: usize,
    cells: Vec<u32>,
}

impl Table {
    /// Builds the table row by row in parallel.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize + Sync) -> Self {
        let mut cells = vec![0u32; n * n];
        if n > 0 {
            cells.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = f(i, j) as u32;
                }
            });
        }
        Table { n, cells }
    }

    /// Returns `None` when the rows are ragged.
    pub fn from_rows(rows: &[Vec<usize>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        let cells = rows.iter().flatten().map(|&x| x as u32).collect();
        Some(Table { n, cells })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.n + j] as usize
    }

    pub fn set(&mut self, i: usize, j: usize, value: usize) {
        self.cells[i * self.n + j] = value as u32;
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}
