#ifndef AQUIFER_GOLDEN_TABLES_HPP
#define AQUIFER_GOLDEN_TABLES_HPP

#include <vector>

#include "aquifer/scenario.hpp"

// Embedded reference equilibrium tables (3-decimal values) used by
// reproduce_table.  Two printed cells are inconsistent with their own row
// identities and carry corrections; see the errata entries.

namespace aquifer::golden {

enum class Col { H, Psi, Gamma, Mu, Lambda, G, F, UFull, UZero, UConcave };

const char* col_name(Col c);

struct Row {
    Regime regime;
    double swept;
    double cells[10];  // order matches Col; NaN = blank in the reference
};

struct Erratum {
    int row;  // index into Table::rows
    Col col;
    double corrected;
    const char* note;
};

struct Table {
    TableId id;
    ModelParams params;  // swept field is a placeholder
    Axis axis;
    std::vector<Col> columns;
    std::vector<Row> rows;
    std::vector<Erratum> errata;
};

const Table& table(TableId id);

}  // namespace aquifer::golden

#endif
