//! Data sheets: every enumerative invariant of a lattice in one block.

use std::fmt::Write;

use crate::classify;
use crate::enumerate::{self, enumerate, EnumerateConfig, EnumerationStore};
use crate::error::Result;
use crate::lattice::SubgroupLattice;
use crate::model::{analyze_intervals, ModelCounts};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataSheet {
    pub name: String,
    pub transfer_systems: usize,
    pub complexity: usize,
    pub generation_statistics: Vec<usize>,
    pub saturated: usize,
    pub saturated_complexity: usize,
    pub cosaturated: usize,
    pub cosaturated_complexity: usize,
    pub width: usize,
    pub flat: usize,
    pub models: ModelCounts,
}

impl DataSheet {
    pub fn compute(lattice: &SubgroupLattice, config: &EnumerateConfig) -> Result<Self> {
        let all = enumerate(lattice, "all", config)?;
        Self::from_store(lattice, &all, config)
    }

    /// Builds the sheet reusing an ALL store for `lattice`.
    pub fn from_store(
        lattice: &SubgroupLattice,
        all: &EnumerationStore,
        config: &EnumerateConfig,
    ) -> Result<Self> {
        let saturated = enumerate(lattice, "saturated", config)?;
        let cosaturated = enumerate(lattice, "cosaturated", config)?;
        let models = analyze_intervals(all, lattice, config)?.counts;
        Ok(DataSheet {
            name: lattice.name().to_string(),
            transfer_systems: all.len(),
            complexity: all.complexity(),
            generation_statistics: all.generation_statistics(),
            saturated: saturated.len(),
            saturated_complexity: saturated.complexity(),
            cosaturated: cosaturated.len(),
            cosaturated_complexity: cosaturated.complexity(),
            width: enumerate::width(lattice),
            flat: all
                .systems()
                .filter(|t| classify::is_flat(t, lattice))
                .count(),
            models,
        })
    }

    fn statistics(&self) -> String {
        let values: Vec<String> = self
            .generation_statistics
            .iter()
            .map(usize::to_string)
            .collect();
        values.join(",")
    }

    pub fn to_text(&self) -> String {
        let m = &self.models;
        let mut s = String::new();
        let _ = writeln!(s, "G={}", self.name);
        let _ = writeln!(s, "#Transfer Systems={}", self.transfer_systems);
        let _ = writeln!(s, "Complexity={}", self.complexity);
        let _ = writeln!(s, "Generation Statistics={{{}}}", self.statistics());
        let _ = writeln!(s, "#Saturated Transfer Systems={}", self.saturated);
        let _ = writeln!(s, "Cosaturated Complexity={}", self.cosaturated_complexity);
        let _ = writeln!(s, "#Cosaturated Transfer Systems={}", self.cosaturated);
        let _ = writeln!(s, "Saturated Complexity={}", self.saturated_complexity);
        let _ = writeln!(s, "Width={}", self.width);
        let _ = writeln!(s, "#Flat transfers={}", self.flat);
        let _ = writeln!(s, "#Premodel structures={}", m.premodel);
        let _ = writeln!(s, "#Composition closed structures={}", m.composition_closed);
        let _ = writeln!(s, "#Quillen structures={}", m.quillen);
        let _ = writeln!(s, "#Weak equivalence types={}", m.weak_equivalence_types);
        let _ = writeln!(s, "#Compatible pairs={}", m.compatible);
        s
    }

    pub fn to_latex(&self) -> String {
        let m = &self.models;
        let rows = [
            ("\\#Transfer systems", self.transfer_systems.to_string()),
            ("Complexity", self.complexity.to_string()),
            ("Width", self.width.to_string()),
            (
                "Generation values",
                format!("\\{{{}\\}}", self.statistics()),
            ),
            ("\\#Saturated", self.saturated.to_string()),
            (
                "Saturated complexity",
                self.saturated_complexity.to_string(),
            ),
            ("\\#Cosaturated", self.cosaturated.to_string()),
            (
                "Cosaturated complexity",
                self.cosaturated_complexity.to_string(),
            ),
            ("\\#Flat", self.flat.to_string()),
            ("\\#Premodel structures", m.premodel.to_string()),
            ("\\#C.closed structures", m.composition_closed.to_string()),
            ("\\#Quillen structures", m.quillen.to_string()),
            (
                "\\#Weak equivalence types",
                m.weak_equivalence_types.to_string(),
            ),
            ("\\#Compatible pairs", m.compatible.to_string()),
        ];
        let mut s = String::from("\\begin{tabular}{|cc|}\n\\hline\n");
        let _ = writeln!(
            s,
            "\\multicolumn{{2}}{{|c|}}{{$G = {}$}} \\\\ \\hline",
            tex_group_name(&self.name)
        );
        for (k, (label, value)) in rows.iter().enumerate() {
            let gap = if k + 1 == rows.len() { " " } else { "" };
            let _ = writeln!(
                s,
                "\\multicolumn{{1}}{{|c|}}{{{label}}} & {value}{gap}\\\\ \\hline"
            );
        }
        s.push_str("\\end{tabular}\n");
        s
    }
}

pub fn data_sheet(lattice: &SubgroupLattice, config: &EnumerateConfig) -> Result<String> {
    Ok(DataSheet::compute(lattice, config)?.to_text())
}

pub fn data_sheet_latex(lattice: &SubgroupLattice, config: &EnumerateConfig) -> Result<String> {
    Ok(DataSheet::compute(lattice, config)?.to_latex())
}

/// `A5` becomes `A_5`, `C30` becomes `C_{30}`, `C2xC2` becomes
/// `C_2 \times C_2`. Names of any other shape pass through.
pub fn tex_group_name(name: &str) -> String {
    let factor = |f: &str| -> Option<String> {
        let split = f.find(|c: char| c.is_ascii_digit())?;
        let (head, digits) = f.split_at(split);
        if head.is_empty()
            || !head.chars().all(|c| c.is_ascii_alphabetic())
            || !digits.chars().all(|c| c.is_ascii_digit())
        {
            return None;
        }
        Some(if digits.len() == 1 {
            format!("{head}_{digits}")
        } else {
            format!("{head}_{{{digits}}}")
        })
    };
    name.split('x')
        .map(factor)
        .collect::<Option<Vec<_>>>()
        .map(|parts| parts.join(" \\times "))
        .unwrap_or_else(|| name.to_string())
}
