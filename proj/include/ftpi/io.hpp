#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ftpi/design.hpp"
#include "ftpi/group.hpp"
#include "ftpi/matgroup.hpp"
#include "ftpi/sieve.hpp"

namespace ftpi {

// .grp: "degree N", then one generator per line in disjoint-cycle notation
// over 0-based points; '#' starts a comment; no generator lines = identity
PermGroup read_grp(const std::string& path);
PermGroup read_grp_stream(std::istream& in, const std::string& name);
void write_grp(const PermGroup& g, const std::string& path, const std::string& comment = "");
std::string grp_to_string(const PermGroup& g, const std::string& comment = "");

// .dsg: "v N", then one block per line as space-separated 0-based points;
// duplicate lines encode multiplicity
Design read_dsg(const std::string& path);
void write_dsg(const Design& d, const std::string& path, const std::string& comment = "");

// .mat: "field p e" header, then matrices as blocks of rows (space-separated
// element codes), blank line between matrices
std::vector<Mat> read_mat(const std::string& path);
void write_mat(const std::vector<Mat>& mats, const std::string& path,
               const std::string& comment = "");

// tuple CSV with header lambda,v,k,r,b,c,d,ell
std::vector<ParameterTuple> read_tuple_csv(const std::string& path);
std::string tuples_to_csv(const std::vector<ParameterTuple>& ts);
void write_tuple_csv(const std::vector<ParameterTuple>& ts, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ftpi
