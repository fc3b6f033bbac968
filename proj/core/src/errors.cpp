#include "prymscope/errors.hpp"

namespace prymscope {

const char* errc_name(errc code) {
  switch (code) {
    case errc::mixed_modulus: return "MIXED_MODULUS";
    case errc::mixed_length: return "MIXED_LENGTH";
    case errc::bad_modulus: return "BAD_MODULUS";
    case errc::bad_dimensions: return "BAD_DIMENSIONS";
    case errc::too_few_columns: return "TOO_FEW_COLUMNS";
    case errc::zero_column: return "ZERO_COLUMN";
    case errc::row_sum_nonzero: return "ROW_SUM_NONZERO";
    case errc::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case errc::sum_not_zero: return "SUM_NOT_ZERO";
    case errc::not_involution: return "NOT_INVOLUTION";
    case errc::odd_modulus: return "ODD_MODULUS";
    case errc::sigma_not_in_group: return "SIGMA_NOT_IN_GROUP";
    case errc::sigma_ramified: return "SIGMA_RAMIFIED";
    case errc::spec_out_of_range: return "SPEC_OUT_OF_RANGE";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::io_error: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace prymscope
