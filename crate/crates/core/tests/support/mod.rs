pub mod torus3d;
