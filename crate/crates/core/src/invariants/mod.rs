pub mod cycles;
pub mod euler;

pub use cycles::{
    census, corner_orbit, corner_successor, count_cstar_by_edge_search, cstar_corner_sets, cstar_cycles_by_edge_search,
    enumerate_cstar_cycles, enumerate_st_cycles, enumerate_tu_cycles, CycleCensus, Exit,
};
pub use euler::{
    euler_equipped, euler_four_colour, orientable_equipped, orientable_four_colour, surface_type,
    surface_type_equipped, surface_type_four_colour, SurfaceType,
};
