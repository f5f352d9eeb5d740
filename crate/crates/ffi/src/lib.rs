//! C ABI surface (to be filled in).
