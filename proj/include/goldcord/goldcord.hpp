#pragma once

#include "goldcord/certificate.hpp"
#include "goldcord/compositions.hpp"
#include "goldcord/edge_coloring.hpp"
#include "goldcord/goldberg.hpp"
#include "goldcord/graph.hpp"
#include "goldcord/io.hpp"
#include "goldcord/isomorphism.hpp"
#include "goldcord/labeling.hpp"
#include "goldcord/properties.hpp"
#include "goldcord/search.hpp"
