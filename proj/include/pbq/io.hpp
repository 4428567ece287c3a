#pragma once

#include <string>
#include <vector>

#include "pbq/algebra.hpp"
#include "pbq/sweep.hpp"

namespace pbq {

// "a/b" or "a" parse as exact rationals; a decimal point or exponent switches
// to the approximate backend at the given precision.
Weight weight_from_string(const std::string& text, unsigned digits = kDefaultDigits);

// Comma-separated weights and/or "start:step:end" inclusive rational ranges,
// e.g. "1/2,2,3:1/2:5".
std::vector<Rational> parse_weight_grid(const std::string& text);

// Compact scalar rendering for tables: exact rationals verbatim, everything
// else as a rounded complex decimal.
std::string scalar_brief(const Scalar& s, unsigned digits = 10);

std::string rep_to_json_string(const RepMatrices& rep);
RepMatrices rep_from_json_string(const std::string& text);

std::string element_to_json_string(const AlgebraElement& e);
std::string matrix_to_json_string(const Matrix& mat);

// m,k,case,p,L,dim,casimir_re,casimir_im,unitarizable
std::string descriptors_csv(const std::vector<IrrepDescriptor>& list,
                            unsigned digits = kDefaultDigits);
std::string descriptors_json_string(const std::vector<IrrepDescriptor>& list);

// m,k,case,p,L,dim,status
std::string census_csv(const AlgebraParams& params, const std::vector<CensusRow>& rows);
std::string census_json_string(const AlgebraParams& params, const std::vector<CensusRow>& rows);

// Largest entrywise distance across the four generator matrices.
Real rep_max_deviation(const RepMatrices& a, const RepMatrices& b,
                       unsigned digits = kDefaultDigits);

// Conventional name of a stored orthonormal golden file.
std::string fixture_filename(long m, long k, long L);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pbq
