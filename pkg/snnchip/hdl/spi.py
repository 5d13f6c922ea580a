"""
spi_peripheral.v
================

Verilog for the mode-0 SPI write-only peripheral. Each input line passes a
two-flop synchronizer before edge detection; a completed 16-bit frame raises
``wr_en`` for one cycle with the decoded address and data.
"""

FILENAME = "spi_peripheral.v"

SPI_PERIPHERAL_V = """\
// spi_peripheral.v
// Mode-0 SPI receiver (CPOL=0, CPHA=0), 16-bit frames, MSB first:
//   bits 15..8  register address
//   bits  7..0  data
// Frames may follow each other while cs_n stays low. Raising cs_n in the
// middle of a frame discards it. MISO is not driven.

module spi_peripheral (
    input  wire       clk,
    input  wire       rst,
    input  wire       sclk,
    input  wire       mosi,
    input  wire       cs_n,
    output wire       miso,
    output reg        wr_en,
    output reg  [7:0] wr_addr,
    output reg  [7:0] wr_data
);

    // two-flop synchronizers into the clk domain
    reg [1:0] sclk_sync;
    reg [1:0] mosi_sync;
    reg [1:0] cs_sync;

    always @(posedge clk) begin
        if (rst) begin
            sclk_sync <= 2'b00;
            mosi_sync <= 2'b00;
            cs_sync   <= 2'b00;
        end else begin
            sclk_sync <= {sclk_sync[0], sclk};
            mosi_sync <= {mosi_sync[0], mosi};
            cs_sync   <= {cs_sync[0], ~cs_n};
        end
    end

    wire sclk_s = sclk_sync[1];
    wire mosi_s = mosi_sync[1];
    wire cs_s   = cs_sync[1];    // high while selected

    reg        prev_sclk;
    reg        prev_cs;
    reg        active;
    reg [15:0] shift_reg;
    reg [4:0]  bit_count;

    wire        sclk_rise   = sclk_s & ~prev_sclk;
    wire        frame_start = cs_s & ~prev_cs;
    wire        selected    = frame_start | active;
    wire [15:0] shift_base  = frame_start ? 16'd0 : shift_reg;
    wire [4:0]  count_base  = frame_start ? 5'd0 : bit_count;
    wire [15:0] shift_next  = {shift_base[14:0], mosi_s};
    wire [4:0]  count_next  = count_base + 5'd1;

    assign miso = 1'b0;

    always @(posedge clk) begin
        if (rst) begin
            prev_sclk <= 1'b0;
            prev_cs   <= 1'b0;
            active    <= 1'b0;
            shift_reg <= 16'd0;
            bit_count <= 5'd0;
            wr_en     <= 1'b0;
            wr_addr   <= 8'd0;
            wr_data   <= 8'd0;
        end else begin
            prev_sclk <= sclk_s;
            prev_cs   <= cs_s;
            wr_en     <= 1'b0;
            if (!cs_s) begin
                active    <= 1'b0;
                shift_reg <= 16'd0;
                bit_count <= 5'd0;
            end else if (selected && sclk_rise) begin
                active <= 1'b1;
                if (count_next == 5'd16) begin
                    shift_reg <= 16'd0;
                    bit_count <= 5'd0;
                    wr_en     <= 1'b1;
                    wr_addr   <= shift_next[15:8];
                    wr_data   <= shift_next[7:0];
                end else begin
                    shift_reg <= shift_next;
                    bit_count <= count_next;
                end
            end else begin
                active    <= selected;
                shift_reg <= shift_base;
                bit_count <= count_base;
            end
        end
    end

endmodule
"""


def render() -> str:
    return SPI_PERIPHERAL_V
