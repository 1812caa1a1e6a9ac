//! The printed correction tables, loaded verbatim as claimed data.
//!
//! Each row records the photon-counting tuple, the claimed Bob-state phase,
//! the claimed correction indices and (for the 32 pure two-zero rows) the
//! claimed fidelity form. The runtime-derived table is authoritative; these
//! rows exist so the audit can diff claim against simulation.

use crate::analysis::Form;

/// One claimed row of the two-zero success/failure table.
#[derive(Debug, Clone, Copy)]
pub struct Table1Row {
    pub symbols: [u8; 4],
    /// Claimed Bob-state phase as (re, im) in {-1, 0, 1}.
    pub phase: (i8, i8),
    pub j: u8,
    pub k: u8,
    pub m: u8,
    pub form: Form,
}

/// One claimed row of the one-zero (Group IV) table.
#[derive(Debug, Clone, Copy)]
pub struct Table2Row {
    pub symbols: [u8; 4],
    /// Claimed Bob-state phase as (re, im) in {-1, 0, 1}.
    pub phase: (i8, i8),
    pub j: u8,
    pub k: u8,
}

/// The 32 claimed two-zero rows (prescribed correction: `sqrt2 U^{(j,k,m)}`
/// for odd m, `U^{(j,k)}` for even m).
pub const TABLE1: &[Table1Row] = &[
    Table1Row { symbols: [4, 4, 0, 0], phase: (1, 0), j: 1, k: 0, m: 0, form: Form::F1 },
    Table1Row { symbols: [2, 2, 0, 0], phase: (1, 0), j: 1, k: 0, m: 0, form: Form::F1 },
    Table1Row { symbols: [0, 0, 4, 4], phase: (1, 0), j: 2, k: 0, m: 0, form: Form::F1 },
    Table1Row { symbols: [0, 0, 2, 2], phase: (1, 0), j: 2, k: 0, m: 0, form: Form::F1 },
    Table1Row { symbols: [1, 3, 0, 0], phase: (-1, 0), j: 1, k: 0, m: 2, form: Form::F2 },
    Table1Row { symbols: [3, 1, 0, 0], phase: (-1, 0), j: 1, k: 0, m: 2, form: Form::F2 },
    Table1Row { symbols: [0, 0, 1, 3], phase: (-1, 0), j: 2, k: 0, m: 2, form: Form::F2 },
    Table1Row { symbols: [0, 0, 3, 1], phase: (-1, 0), j: 2, k: 0, m: 2, form: Form::F2 },
    Table1Row { symbols: [4, 2, 0, 0], phase: (-1, 0), j: 1, k: 2, m: 2, form: Form::F3 },
    Table1Row { symbols: [2, 4, 0, 0], phase: (-1, 0), j: 1, k: 2, m: 2, form: Form::F3 },
    Table1Row { symbols: [0, 0, 4, 2], phase: (-1, 0), j: 2, k: 2, m: 2, form: Form::F3 },
    Table1Row { symbols: [0, 0, 2, 4], phase: (-1, 0), j: 2, k: 2, m: 2, form: Form::F3 },
    Table1Row { symbols: [1, 1, 0, 0], phase: (1, 0), j: 1, k: 2, m: 0, form: Form::F4 },
    Table1Row { symbols: [3, 3, 0, 0], phase: (1, 0), j: 1, k: 2, m: 0, form: Form::F4 },
    Table1Row { symbols: [0, 0, 1, 1], phase: (1, 0), j: 2, k: 2, m: 0, form: Form::F4 },
    Table1Row { symbols: [0, 0, 3, 3], phase: (1, 0), j: 2, k: 2, m: 0, form: Form::F4 },
    Table1Row { symbols: [4, 1, 0, 0], phase: (1, 0), j: 3, k: 1, m: 3, form: Form::F5 },
    Table1Row { symbols: [2, 3, 0, 0], phase: (1, 0), j: 3, k: 1, m: 3, form: Form::F5 },
    Table1Row { symbols: [0, 0, 4, 1], phase: (1, 0), j: 0, k: 1, m: 1, form: Form::F5 },
    Table1Row { symbols: [0, 0, 2, 3], phase: (1, 0), j: 0, k: 1, m: 1, form: Form::F5 },
    Table1Row { symbols: [1, 4, 0, 0], phase: (1, 0), j: 3, k: 1, m: 1, form: Form::F5 },
    Table1Row { symbols: [3, 2, 0, 0], phase: (1, 0), j: 3, k: 1, m: 1, form: Form::F5 },
    Table1Row { symbols: [0, 0, 1, 4], phase: (1, 0), j: 0, k: 1, m: 3, form: Form::F5 },
    Table1Row { symbols: [0, 0, 3, 2], phase: (1, 0), j: 0, k: 1, m: 3, form: Form::F5 },
    Table1Row { symbols: [4, 3, 0, 0], phase: (1, 0), j: 3, k: 3, m: 1, form: Form::F6 },
    Table1Row { symbols: [2, 1, 0, 0], phase: (1, 0), j: 3, k: 3, m: 1, form: Form::F6 },
    Table1Row { symbols: [0, 0, 4, 3], phase: (1, 0), j: 0, k: 3, m: 3, form: Form::F6 },
    Table1Row { symbols: [0, 0, 2, 1], phase: (1, 0), j: 0, k: 3, m: 3, form: Form::F6 },
    Table1Row { symbols: [1, 2, 0, 0], phase: (1, 0), j: 3, k: 3, m: 3, form: Form::F6 },
    Table1Row { symbols: [3, 4, 0, 0], phase: (1, 0), j: 3, k: 3, m: 3, form: Form::F6 },
    Table1Row { symbols: [0, 0, 1, 2], phase: (1, 0), j: 0, k: 3, m: 1, form: Form::F6 },
    Table1Row { symbols: [0, 0, 3, 4], phase: (1, 0), j: 0, k: 3, m: 1, form: Form::F6 },
];

/// The 256 claimed Group IV rows, in printed order (duplicates included).
pub const TABLE2: &[Table2Row] = &[
    Table2Row { symbols: [0, 4, 4, 4], phase: (1, 0), j: 2, k: 0 },
    Table2Row { symbols: [0, 4, 2, 2], phase: (1, 0), j: 2, k: 0 },
    Table2Row { symbols: [0, 2, 1, 1], phase: (1, 0), j: 2, k: 0 },
    Table2Row { symbols: [0, 2, 3, 3], phase: (1, 0), j: 2, k: 0 },
    Table2Row { symbols: [0, 4, 3, 1], phase: (-1, 0), j: 2, k: 0 },
    Table2Row { symbols: [0, 4, 1, 3], phase: (-1, 0), j: 2, k: 0 },
    Table2Row { symbols: [0, 2, 2, 4], phase: (-1, 0), j: 2, k: 0 },
    Table2Row { symbols: [0, 2, 4, 2], phase: (-1, 0), j: 2, k: 0 },
    Table2Row { symbols: [0, 1, 3, 4], phase: (0, 1), j: 2, k: 0 },
    Table2Row { symbols: [0, 1, 1, 2], phase: (0, 1), j: 2, k: 0 },
    Table2Row { symbols: [0, 3, 4, 1], phase: (0, 1), j: 2, k: 0 },
    Table2Row { symbols: [0, 3, 2, 3], phase: (0, 1), j: 2, k: 0 },
    Table2Row { symbols: [0, 1, 2, 1], phase: (0, -1), j: 2, k: 0 },
    Table2Row { symbols: [0, 1, 4, 3], phase: (0, -1), j: 2, k: 0 },
    Table2Row { symbols: [0, 3, 1, 4], phase: (0, -1), j: 2, k: 0 },
    Table2Row { symbols: [0, 3, 3, 2], phase: (0, -1), j: 2, k: 0 },
    Table2Row { symbols: [4, 0, 4, 4], phase: (1, 0), j: 0, k: 0 },
    Table2Row { symbols: [4, 0, 3, 1], phase: (1, 0), j: 0, k: 0 },
    Table2Row { symbols: [4, 0, 2, 2], phase: (1, 0), j: 0, k: 0 },
    Table2Row { symbols: [4, 0, 4, 3], phase: (1, 0), j: 0, k: 0 },
    Table2Row { symbols: [1, 0, 3, 4], phase: (0, 1), j: 0, k: 0 },
    Table2Row { symbols: [1, 0, 2, 1], phase: (0, 1), j: 0, k: 0 },
    Table2Row { symbols: [1, 0, 1, 2], phase: (0, 1), j: 0, k: 0 },
    Table2Row { symbols: [1, 0, 4, 3], phase: (0, 1), j: 0, k: 0 },
    Table2Row { symbols: [2, 0, 2, 4], phase: (-1, 0), j: 0, k: 0 },
    Table2Row { symbols: [2, 0, 1, 1], phase: (-1, 0), j: 0, k: 0 },
    Table2Row { symbols: [2, 0, 4, 2], phase: (-1, 0), j: 0, k: 0 },
    Table2Row { symbols: [2, 0, 3, 3], phase: (-1, 0), j: 0, k: 0 },
    Table2Row { symbols: [3, 0, 1, 4], phase: (0, -1), j: 0, k: 0 },
    Table2Row { symbols: [3, 0, 4, 1], phase: (0, -1), j: 0, k: 0 },
    Table2Row { symbols: [3, 0, 3, 2], phase: (0, -1), j: 0, k: 0 },
    Table2Row { symbols: [3, 0, 2, 3], phase: (0, -1), j: 0, k: 0 },
    Table2Row { symbols: [2, 2, 0, 4], phase: (1, 0), j: 1, k: 0 },
    Table2Row { symbols: [2, 4, 0, 2], phase: (1, 0), j: 1, k: 0 },
    Table2Row { symbols: [3, 4, 0, 1], phase: (1, 0), j: 1, k: 0 },
    Table2Row { symbols: [3, 2, 0, 3], phase: (1, 0), j: 1, k: 0 },
    Table2Row { symbols: [4, 4, 0, 4], phase: (1, 0), j: 1, k: 0 },
    Table2Row { symbols: [4, 2, 0, 2], phase: (1, 0), j: 1, k: 0 },
    Table2Row { symbols: [1, 2, 0, 1], phase: (1, 0), j: 1, k: 0 },
    Table2Row { symbols: [1, 4, 0, 3], phase: (1, 0), j: 1, k: 0 },
    Table2Row { symbols: [2, 1, 0, 1], phase: (-1, 0), j: 1, k: 0 },
    Table2Row { symbols: [2, 3, 0, 3], phase: (-1, 0), j: 1, k: 0 },
    Table2Row { symbols: [3, 1, 0, 4], phase: (-1, 0), j: 1, k: 0 },
    Table2Row { symbols: [3, 3, 0, 2], phase: (-1, 0), j: 1, k: 0 },
    Table2Row { symbols: [4, 3, 0, 1], phase: (-1, 0), j: 1, k: 0 },
    Table2Row { symbols: [4, 1, 0, 3], phase: (-1, 0), j: 1, k: 0 },
    Table2Row { symbols: [1, 3, 0, 4], phase: (-1, 0), j: 1, k: 0 },
    Table2Row { symbols: [1, 1, 0, 2], phase: (-1, 0), j: 1, k: 0 },
    Table2Row { symbols: [4, 4, 4, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [4, 3, 1, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [4, 2, 2, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [4, 1, 3, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [2, 2, 4, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [2, 1, 1, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [2, 4, 2, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [2, 3, 3, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [1, 3, 4, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [1, 2, 1, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [1, 1, 2, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [1, 4, 3, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [3, 1, 4, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [3, 4, 1, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [3, 3, 2, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [3, 2, 3, 0], phase: (1, 0), j: 3, k: 0 },
    Table2Row { symbols: [0, 1, 4, 4], phase: (1, 0), j: 2, k: 1 },
    Table2Row { symbols: [0, 1, 2, 2], phase: (1, 0), j: 2, k: 1 },
    Table2Row { symbols: [0, 3, 1, 1], phase: (1, 0), j: 2, k: 1 },
    Table2Row { symbols: [0, 3, 3, 3], phase: (1, 0), j: 2, k: 1 },
    Table2Row { symbols: [0, 1, 3, 1], phase: (-1, 0), j: 2, k: 1 },
    Table2Row { symbols: [0, 1, 1, 3], phase: (-1, 0), j: 2, k: 1 },
    Table2Row { symbols: [0, 3, 2, 4], phase: (-1, 0), j: 2, k: 1 },
    Table2Row { symbols: [0, 3, 4, 2], phase: (-1, 0), j: 2, k: 1 },
    Table2Row { symbols: [0, 4, 1, 4], phase: (0, -1), j: 2, k: 1 },
    Table2Row { symbols: [0, 4, 3, 2], phase: (0, -1), j: 2, k: 1 },
    Table2Row { symbols: [0, 2, 2, 1], phase: (0, -1), j: 2, k: 1 },
    Table2Row { symbols: [0, 2, 4, 3], phase: (0, -1), j: 2, k: 1 },
    Table2Row { symbols: [0, 4, 4, 1], phase: (0, 1), j: 2, k: 1 },
    Table2Row { symbols: [0, 4, 2, 3], phase: (0, 1), j: 2, k: 1 },
    Table2Row { symbols: [0, 2, 1, 2], phase: (0, 1), j: 2, k: 1 },
    Table2Row { symbols: [0, 2, 3, 4], phase: (0, 1), j: 2, k: 1 },
    Table2Row { symbols: [4, 0, 1, 4], phase: (1, 0), j: 0, k: 1 },
    Table2Row { symbols: [4, 0, 4, 1], phase: (1, 0), j: 0, k: 1 },
    Table2Row { symbols: [4, 0, 3, 2], phase: (1, 0), j: 0, k: 1 },
    Table2Row { symbols: [4, 0, 2, 3], phase: (1, 0), j: 0, k: 1 },
    Table2Row { symbols: [3, 0, 2, 4], phase: (0, -1), j: 0, k: 1 },
    Table2Row { symbols: [3, 0, 1, 1], phase: (0, -1), j: 0, k: 1 },
    Table2Row { symbols: [3, 0, 4, 2], phase: (0, -1), j: 0, k: 1 },
    Table2Row { symbols: [3, 0, 3, 3], phase: (0, -1), j: 0, k: 1 },
    Table2Row { symbols: [2, 0, 3, 4], phase: (-1, 0), j: 0, k: 1 },
    Table2Row { symbols: [2, 0, 2, 1], phase: (-1, 0), j: 0, k: 1 },
    Table2Row { symbols: [2, 0, 1, 2], phase: (-1, 0), j: 0, k: 1 },
    Table2Row { symbols: [2, 0, 4, 3], phase: (-1, 0), j: 0, k: 1 },
    Table2Row { symbols: [1, 0, 4, 4], phase: (0, 1), j: 0, k: 1 },
    Table2Row { symbols: [1, 0, 3, 1], phase: (0, 1), j: 0, k: 1 },
    Table2Row { symbols: [1, 0, 2, 2], phase: (0, 1), j: 0, k: 1 },
    Table2Row { symbols: [1, 0, 1, 3], phase: (0, 1), j: 0, k: 1 },
    Table2Row { symbols: [2, 3, 0, 4], phase: (1, 0), j: 1, k: 1 },
    Table2Row { symbols: [2, 1, 0, 2], phase: (1, 0), j: 1, k: 1 },
    Table2Row { symbols: [3, 1, 0, 1], phase: (1, 0), j: 1, k: 1 },
    Table2Row { symbols: [3, 3, 0, 3], phase: (1, 0), j: 1, k: 1 },
    Table2Row { symbols: [4, 1, 0, 4], phase: (1, 0), j: 1, k: 1 },
    Table2Row { symbols: [4, 3, 0, 2], phase: (1, 0), j: 1, k: 1 },
    Table2Row { symbols: [1, 3, 0, 1], phase: (1, 0), j: 1, k: 1 },
    Table2Row { symbols: [1, 1, 0, 3], phase: (1, 0), j: 1, k: 1 },
    Table2Row { symbols: [2, 2, 0, 1], phase: (-1, 0), j: 1, k: 1 },
    Table2Row { symbols: [2, 4, 0, 3], phase: (-1, 0), j: 1, k: 1 },
    Table2Row { symbols: [3, 2, 0, 4], phase: (-1, 0), j: 1, k: 1 },
    Table2Row { symbols: [3, 4, 0, 2], phase: (-1, 0), j: 1, k: 1 },
    Table2Row { symbols: [4, 4, 0, 1], phase: (-1, 0), j: 1, k: 1 },
    Table2Row { symbols: [4, 2, 0, 3], phase: (-1, 0), j: 1, k: 1 },
    Table2Row { symbols: [1, 4, 0, 4], phase: (-1, 0), j: 1, k: 1 },
    Table2Row { symbols: [1, 2, 0, 2], phase: (-1, 0), j: 1, k: 1 },
    Table2Row { symbols: [4, 1, 4, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [4, 4, 1, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [4, 3, 2, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [4, 2, 3, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [2, 3, 4, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [2, 2, 1, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [2, 1, 2, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [2, 4, 3, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [1, 4, 4, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [1, 3, 1, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [1, 2, 2, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [1, 1, 3, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [3, 2, 4, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [3, 1, 1, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [3, 4, 2, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [3, 3, 3, 0], phase: (1, 0), j: 3, k: 1 },
    Table2Row { symbols: [0, 1, 1, 4], phase: (1, 0), j: 2, k: 2 },
    Table2Row { symbols: [0, 1, 3, 2], phase: (1, 0), j: 2, k: 2 },
    Table2Row { symbols: [0, 3, 2, 1], phase: (1, 0), j: 2, k: 2 },
    Table2Row { symbols: [0, 3, 4, 3], phase: (1, 0), j: 2, k: 2 },
    Table2Row { symbols: [0, 1, 4, 1], phase: (-1, 0), j: 2, k: 2 },
    Table2Row { symbols: [0, 1, 2, 3], phase: (-1, 0), j: 2, k: 2 },
    Table2Row { symbols: [0, 3, 3, 4], phase: (-1, 0), j: 2, k: 2 },
    Table2Row { symbols: [0, 3, 1, 2], phase: (-1, 0), j: 2, k: 2 },
    Table2Row { symbols: [0, 4, 2, 4], phase: (0, -1), j: 2, k: 2 },
    Table2Row { symbols: [0, 4, 4, 2], phase: (0, -1), j: 2, k: 2 },
    Table2Row { symbols: [0, 2, 3, 1], phase: (0, -1), j: 2, k: 2 },
    Table2Row { symbols: [0, 2, 1, 3], phase: (0, -1), j: 2, k: 2 },
    Table2Row { symbols: [0, 4, 4, 1], phase: (0, 1), j: 2, k: 2 },
    Table2Row { symbols: [0, 4, 3, 3], phase: (0, 1), j: 2, k: 2 },
    Table2Row { symbols: [0, 2, 4, 4], phase: (0, 1), j: 2, k: 2 },
    Table2Row { symbols: [0, 2, 2, 2], phase: (0, 1), j: 2, k: 2 },
    Table2Row { symbols: [4, 0, 2, 4], phase: (1, 0), j: 0, k: 2 },
    Table2Row { symbols: [4, 0, 1, 1], phase: (1, 0), j: 0, k: 2 },
    Table2Row { symbols: [4, 0, 4, 2], phase: (1, 0), j: 0, k: 2 },
    Table2Row { symbols: [4, 0, 3, 3], phase: (1, 0), j: 0, k: 2 },
    Table2Row { symbols: [1, 0, 1, 4], phase: (0, 1), j: 0, k: 2 },
    Table2Row { symbols: [1, 0, 4, 1], phase: (0, 1), j: 0, k: 2 },
    Table2Row { symbols: [1, 0, 3, 2], phase: (0, 1), j: 0, k: 2 },
    Table2Row { symbols: [1, 0, 2, 3], phase: (0, 1), j: 0, k: 2 },
    Table2Row { symbols: [2, 0, 4, 4], phase: (-1, 0), j: 0, k: 2 },
    Table2Row { symbols: [2, 0, 3, 1], phase: (-1, 0), j: 0, k: 2 },
    Table2Row { symbols: [2, 0, 2, 2], phase: (-1, 0), j: 0, k: 2 },
    Table2Row { symbols: [2, 0, 1, 3], phase: (-1, 0), j: 0, k: 2 },
    Table2Row { symbols: [3, 0, 3, 4], phase: (0, -1), j: 0, k: 2 },
    Table2Row { symbols: [3, 0, 2, 1], phase: (0, -1), j: 0, k: 2 },
    Table2Row { symbols: [3, 0, 1, 2], phase: (0, -1), j: 0, k: 2 },
    Table2Row { symbols: [3, 0, 4, 3], phase: (0, -1), j: 0, k: 2 },
    Table2Row { symbols: [2, 4, 0, 4], phase: (1, 0), j: 1, k: 2 },
    Table2Row { symbols: [2, 2, 0, 2], phase: (1, 0), j: 1, k: 2 },
    Table2Row { symbols: [3, 2, 0, 1], phase: (1, 0), j: 1, k: 2 },
    Table2Row { symbols: [3, 4, 0, 3], phase: (1, 0), j: 1, k: 2 },
    Table2Row { symbols: [4, 2, 0, 4], phase: (1, 0), j: 1, k: 2 },
    Table2Row { symbols: [4, 4, 0, 2], phase: (1, 0), j: 1, k: 2 },
    Table2Row { symbols: [1, 4, 0, 1], phase: (1, 0), j: 1, k: 2 },
    Table2Row { symbols: [1, 2, 0, 3], phase: (1, 0), j: 1, k: 2 },
    Table2Row { symbols: [2, 3, 0, 1], phase: (-1, 0), j: 1, k: 2 },
    Table2Row { symbols: [4, 4, 0, 2], phase: (-1, 0), j: 1, k: 2 },
    Table2Row { symbols: [3, 3, 0, 4], phase: (-1, 0), j: 1, k: 2 },
    Table2Row { symbols: [3, 1, 0, 2], phase: (-1, 0), j: 1, k: 2 },
    Table2Row { symbols: [4, 1, 0, 1], phase: (-1, 0), j: 1, k: 2 },
    Table2Row { symbols: [2, 1, 0, 3], phase: (-1, 0), j: 1, k: 2 },
    Table2Row { symbols: [1, 1, 0, 4], phase: (-1, 0), j: 1, k: 2 },
    Table2Row { symbols: [1, 3, 0, 2], phase: (-1, 0), j: 1, k: 2 },
    Table2Row { symbols: [4, 2, 4, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [4, 1, 1, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [4, 4, 2, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [4, 3, 3, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [2, 4, 4, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [2, 3, 1, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [2, 2, 2, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [2, 1, 3, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [1, 1, 4, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [1, 4, 1, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [1, 3, 2, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [1, 2, 3, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [3, 3, 4, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [3, 2, 1, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [3, 1, 2, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [3, 4, 3, 0], phase: (1, 0), j: 3, k: 2 },
    Table2Row { symbols: [0, 1, 2, 4], phase: (1, 0), j: 2, k: 3 },
    Table2Row { symbols: [0, 1, 4, 2], phase: (1, 0), j: 2, k: 3 },
    Table2Row { symbols: [0, 3, 3, 1], phase: (1, 0), j: 2, k: 3 },
    Table2Row { symbols: [0, 3, 1, 3], phase: (1, 0), j: 2, k: 3 },
    Table2Row { symbols: [0, 1, 1, 1], phase: (-1, 0), j: 2, k: 3 },
    Table2Row { symbols: [0, 1, 3, 3], phase: (-1, 0), j: 2, k: 3 },
    Table2Row { symbols: [0, 3, 4, 4], phase: (-1, 0), j: 2, k: 3 },
    Table2Row { symbols: [0, 3, 2, 2], phase: (-1, 0), j: 2, k: 3 },
    Table2Row { symbols: [0, 4, 3, 4], phase: (0, -1), j: 2, k: 3 },
    Table2Row { symbols: [0, 4, 1, 2], phase: (0, -1), j: 2, k: 3 },
    Table2Row { symbols: [0, 2, 4, 1], phase: (0, -1), j: 2, k: 3 },
    Table2Row { symbols: [0, 2, 2, 3], phase: (0, -1), j: 2, k: 3 },
    Table2Row { symbols: [0, 4, 2, 1], phase: (0, 1), j: 2, k: 3 },
    Table2Row { symbols: [0, 4, 4, 3], phase: (0, 1), j: 2, k: 3 },
    Table2Row { symbols: [0, 2, 1, 4], phase: (0, 1), j: 2, k: 3 },
    Table2Row { symbols: [0, 2, 3, 2], phase: (0, 1), j: 2, k: 3 },
    Table2Row { symbols: [4, 0, 3, 4], phase: (1, 0), j: 0, k: 3 },
    Table2Row { symbols: [4, 0, 2, 1], phase: (1, 0), j: 0, k: 3 },
    Table2Row { symbols: [4, 0, 1, 2], phase: (1, 0), j: 0, k: 3 },
    Table2Row { symbols: [4, 0, 4, 3], phase: (1, 0), j: 0, k: 3 },
    Table2Row { symbols: [1, 0, 2, 4], phase: (0, 1), j: 0, k: 3 },
    Table2Row { symbols: [1, 0, 1, 1], phase: (0, 1), j: 0, k: 3 },
    Table2Row { symbols: [1, 0, 4, 2], phase: (0, 1), j: 0, k: 3 },
    Table2Row { symbols: [1, 0, 3, 3], phase: (0, 1), j: 0, k: 3 },
    Table2Row { symbols: [2, 0, 1, 4], phase: (-1, 0), j: 0, k: 3 },
    Table2Row { symbols: [2, 0, 4, 1], phase: (-1, 0), j: 0, k: 3 },
    Table2Row { symbols: [2, 0, 3, 2], phase: (-1, 0), j: 0, k: 3 },
    Table2Row { symbols: [2, 0, 2, 3], phase: (-1, 0), j: 0, k: 3 },
    Table2Row { symbols: [3, 0, 4, 4], phase: (0, -1), j: 0, k: 3 },
    Table2Row { symbols: [3, 0, 3, 1], phase: (0, -1), j: 0, k: 3 },
    Table2Row { symbols: [3, 0, 2, 2], phase: (0, -1), j: 0, k: 3 },
    Table2Row { symbols: [3, 0, 1, 3], phase: (0, -1), j: 0, k: 3 },
    Table2Row { symbols: [2, 1, 0, 4], phase: (1, 0), j: 1, k: 3 },
    Table2Row { symbols: [2, 3, 0, 2], phase: (1, 0), j: 1, k: 3 },
    Table2Row { symbols: [3, 3, 0, 1], phase: (1, 0), j: 1, k: 3 },
    Table2Row { symbols: [3, 1, 0, 3], phase: (1, 0), j: 1, k: 3 },
    Table2Row { symbols: [4, 3, 0, 4], phase: (1, 0), j: 1, k: 3 },
    Table2Row { symbols: [4, 1, 0, 2], phase: (1, 0), j: 1, k: 3 },
    Table2Row { symbols: [1, 1, 0, 1], phase: (1, 0), j: 1, k: 3 },
    Table2Row { symbols: [1, 3, 0, 3], phase: (1, 0), j: 1, k: 3 },
    Table2Row { symbols: [2, 4, 0, 1], phase: (-1, 0), j: 1, k: 3 },
    Table2Row { symbols: [2, 2, 0, 2], phase: (-1, 0), j: 1, k: 3 },
    Table2Row { symbols: [3, 4, 0, 4], phase: (-1, 0), j: 1, k: 3 },
    Table2Row { symbols: [3, 2, 0, 2], phase: (-1, 0), j: 1, k: 3 },
    Table2Row { symbols: [4, 2, 0, 1], phase: (-1, 0), j: 1, k: 3 },
    Table2Row { symbols: [4, 4, 0, 3], phase: (-1, 0), j: 1, k: 3 },
    Table2Row { symbols: [1, 2, 0, 4], phase: (-1, 0), j: 1, k: 3 },
    Table2Row { symbols: [1, 4, 0, 2], phase: (-1, 0), j: 1, k: 3 },
    Table2Row { symbols: [4, 3, 4, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [4, 2, 1, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [4, 1, 2, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [4, 4, 3, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [2, 1, 4, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [2, 4, 1, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [2, 3, 2, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [2, 2, 3, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [1, 2, 4, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [1, 1, 1, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [1, 4, 2, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [1, 3, 3, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [3, 4, 4, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [3, 3, 1, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [3, 2, 2, 0], phase: (1, 0), j: 3, k: 3 },
    Table2Row { symbols: [3, 1, 3, 0], phase: (1, 0), j: 3, k: 3 },
];
