#pragma once

#include "sflow/cocycle.hpp"

#include <string>

namespace sflow {

/// Orbit cache, little-endian binary:
///   header { "ORB1", d: u32, m: u64, tol: f64 }
///   m records { t: f64, x: d x f64, speed: f64 }
void write_orbit_binary(const OrbitSegment& segment, const std::string& path);
OrbitSegment read_orbit_binary(const std::string& path, FlowPtr system = nullptr);

/// CSV mirror with header t, x_1..x_d, speed.
void write_orbit_csv(const OrbitSegment& segment, const std::string& path);

/// Chain dump mirroring the orbit cache layout:
///   header { "PCC1", n: u32 (= d-1), m: u64 (#steps), scaled: f64 (0/1) }
///   m records { t_i: f64, dt: f64, A: n*n x f64 row-major }
void write_chain_binary(const CocycleChain& chain, const std::string& path);

/// Chain CSV: i, t_i, dt, speed, log_norm, log_mininorm.
void write_chain_csv(const CocycleChain& chain, const std::string& path);

/// FNV-1a 64-bit hash of a file's bytes, as 16 hex digits.
std::string file_hash_hex(const std::string& path);

bool file_exists(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace sflow
