package org.apache.hadoop.hdfs.tools.offlineImageViewer;

import java.io.FileWriter;
import java.io.IOException;

/**
 * TextWriterImageProcessor mixes in the ability for ImageVisitor
 * implementations to easily write their output to a text file.
 */
abstract class TextWriterImageVisitor extends ImageVisitor {
  private boolean printToScreen = false;
  private boolean okToWrite = false;
  private final FileWriter fw;

  /**
   * Create a processor that writes to the file named and may or may not
   * also output to the screen, as specified.
   *
   * @param Name of file to write output to
   * @param Mirror output to screen?
   */
  public TextWriterImageVisitor(String filename, boolean printToScreen)
         throws IOException {
    super();
    this.printToScreen = printToScreen;
    fw = new FileWriter(filename);
    okToWrite = true;
  }

  /**
   * Close output stream and prevent further writing
   */
  void close() throws IOException {
    fw.close();
    okToWrite = false;
  }
}
