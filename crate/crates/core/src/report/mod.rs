//! Text and graphics emitters.

mod sage;
mod sheet;
mod text;
mod tikz;

pub use sage::{covers, format_poset, poset_relation, sage_poset, PosetKind};
pub use sheet::{data_sheet, data_sheet_latex, tex_group_name, DataSheet};
pub use text::{all_transfers_text, subgroup_dictionary};
pub use tikz::edges_to_tikz;
