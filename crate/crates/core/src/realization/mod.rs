pub mod complex;
pub mod generate;
mod union_find;

pub use complex::{
    build_polygon, complex_euler, complex_orientable, equipped_euler_oracle, glue, CellComplex, LabelledPolygon, Side,
    SideLabel,
};
pub use generate::{
    random_admissible, random_admissible_with, random_equipped, shuffled_equipped, shuffled_four_colour,
    GeneratorConfig,
};
